#pragma once

#include <fstream>
#include <sstream>
#include <string>

#include "json.hpp"
#include "pairmds/code.hpp"

namespace pairmds {

/// code file schema: {"field":{"p","m","modulus"},"n","k","generator",
/// "parity" (optional), "provenance"} with elements as decimal indices
inline nlohmann::json code_to_json(const LinearCode& C) {
    nlohmann::json j;
    j["field"] = {{"p", C.field->p()}, {"m", C.field->m()}, {"modulus", C.field->modulus()}};
    j["n"] = C.n;
    j["k"] = C.k;
    auto rows_of = [](const Matrix& M) {
        nlohmann::json rows = nlohmann::json::array();
        for (int r = 0; r < M.rows(); ++r) {
            auto row = M.row(r);
            rows.push_back(std::vector<int>(row.begin(), row.end()));
        }
        return rows;
    };
    j["generator"] = rows_of(C.G);
    if (C.H) j["parity"] = rows_of(*C.H);
    j["provenance"] = C.provenance.is_null() ? nlohmann::json::object() : C.provenance;
    return j;
}

inline LinearCode code_from_json(const nlohmann::json& j) {
    try {
        const auto& jf = j.at("field");
        FieldPtr f = Field::make(jf.at("p").get<int>(), jf.at("m").get<int>(),
                                 jf.at("modulus").get<std::vector<int>>());
        int n = j.at("n").get<int>();
        int k = j.at("k").get<int>();
        auto parse_matrix = [&](const nlohmann::json& rows, const char* what) {
            std::vector<std::vector<int>> m;
            for (const auto& row : rows) m.push_back(row.get<std::vector<int>>());
            Matrix M = Matrix::from_rows(f, m);
            require(M.cols() == n || M.rows() == 0, Errc::DimensionMismatch,
                    std::string(what) + " width differs from n");
            if (M.rows() == 0) return Matrix(f, 0, n);
            return M;
        };
        Matrix G = parse_matrix(j.at("generator"), "generator");
        require(G.rows() == k, Errc::DimensionMismatch, "generator row count differs from k");
        std::optional<Matrix> H;
        if (j.contains("parity")) H = parse_matrix(j.at("parity"), "parity");
        nlohmann::json prov = j.value("provenance", nlohmann::json::object());
        return make_linear_code(f, std::move(G), std::move(H), std::move(prov));
    } catch (const Error& e) {
        raise(Errc::MalformedFile, e.what());
    } catch (const nlohmann::json::exception& e) {
        raise(Errc::MalformedFile, std::string("bad code file structure: ") + e.what());
    }
}

inline void write_code_file(const std::string& path, const LinearCode& C) {
    std::ofstream out(path);
    require(out.good(), Errc::MalformedFile, "cannot open '" + path + "' for writing");
    out << code_to_json(C).dump(1) << "\n";
    require(out.good(), Errc::MalformedFile, "write to '" + path + "' failed");
}

inline LinearCode read_code_file(const std::string& path) {
    std::ifstream in(path);
    require(in.good(), Errc::MalformedFile, "cannot open '" + path + "'");
    nlohmann::json j;
    try {
        in >> j;
    } catch (const nlohmann::json::exception& e) {
        raise(Errc::MalformedFile, std::string("invalid JSON in '") + path + "': " + e.what());
    }
    return code_from_json(j);
}

}  // namespace pairmds
