#include "thue/exotic_table.hpp"

#include <istream>
#include <ostream>

#include <nlohmann/json.hpp>

#include "thue/errors.hpp"

namespace thue {

const std::vector<exotic_row>& expected_exotic_rows() {
    static const std::vector<exotic_row> rows = {
        {0, 1, {{-9, 5}, {-1, 2}, {2, -1}, {4, -9}, {5, 4}}},
        {0, 2, {{-14, -9}, {-3, -1}, {-2, -1}, {1, 5}, {3, 2}, {13, 4}}},
        {0, 3, {{2, 1}}},
        {0, 5, {{-3, -1}, {19, -1}}},
        {1, 1, {{-3, 2}, {1, -3}, {2, 1}}},
        {1, 2, {{-7, -2}, {-3, -1}, {2, 1}, {7, 3}}},
        {2, 2, {{-7, -1}, {-2, -1}}},
        {3, 1, {{-7, -2}, {-2, 9}, {9, -7}}},
        {4, 2, {{3, 2}}},
    };
    return rows;
}

std::vector<exotic_row> load_exotic_rows(std::istream& in) {
    nlohmann::json j;
    try {
        in >> j;
    } catch (const nlohmann::json::exception& e) {
        throw argument_error(std::string("bad exotic table file: ") +
                             e.what());
    }
    if (!j.is_object() || !j.contains("rows") || !j["rows"].is_array())
        throw argument_error("exotic table file needs a top-level rows array");
    std::vector<exotic_row> rows;
    for (const auto& r : j["rows"]) {
        exotic_row row;
        row.n = r.at("n").get<long long>();
        row.a = r.at("a").get<long long>();
        for (const auto& e : r.at("solutions")) {
            if (!e.is_array() || e.size() != 2)
                throw argument_error("exotic table solutions must be pairs");
            row.entries.emplace_back(e[0].get<long long>(),
                                     e[1].get<long long>());
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

void write_exotic_rows(std::ostream& out,
                       const std::vector<exotic_row>& rows) {
    nlohmann::ordered_json desc =
        "Canonical F = +1 representatives of the sporadic solutions of "
        "|F_{n,a}(X,Y)| = 1 outside the trivial and (+-1,+-1) families; "
        "complete for the region below (a = 1 rows complete for all X, Y)";
    nlohmann::ordered_json region = {
        {"n_min", 0},  {"n_max", 10},       {"a_min", 1},
        {"a_max", 70}, {"abs_x_max", 1000}, {"abs_y_max", 1000}};
    out << "{\n  \"description\": " << desc.dump() << ",\n  \"region\": "
        << region.dump() << ",\n  \"rows\": [\n";
    for (std::size_t i = 0; i < rows.size(); ++i) {
        nlohmann::ordered_json row;
        row["n"] = rows[i].n;
        row["a"] = rows[i].a;
        row["solutions"] = nlohmann::ordered_json::array();
        for (const auto& e : rows[i].entries)
            row["solutions"].push_back({e.first, e.second});
        out << "    " << row.dump() << (i + 1 < rows.size() ? ",\n" : "\n");
    }
    out << "  ]\n}\n";
}

}  // namespace thue
