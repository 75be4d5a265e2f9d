#include "skmaass/table_io.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>
#include <vector>

#include <json.hpp>

#include "skmaass/errors.hpp"

namespace skmaass {

using nlohmann::json;

std::string table_to_json(const CoefficientTable& table) {
    std::vector<const std::pair<const QForm, Rational>*> sorted;
    sorted.reserve(table.entries.size());
    for (const auto& e : table.entries)
        sorted.push_back(&e);
    std::sort(sorted.begin(), sorted.end(), [](const auto* x, const auto* y) {
        auto key = [](const QForm& f) {
            return std::make_tuple(-f.disc(), f.a, f.b, f.c);
        };
        return key(x->first) < key(y->first);
    });

    json entries = json::array();
    for (const auto* e : sorted) {
        entries.push_back({{"a", e->first.a},
                           {"b", e->first.b},
                           {"c", e->first.c},
                           {"value", rational_str(e->second)}});
    }
    json out{{"weight", table.k}, {"entries", entries}};
    return out.dump(1);
}

CoefficientTable table_from_json(const std::string& text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& e) {
        throw format_error(std::string("table parse error: ") + e.what());
    }
    if (!doc.is_object() || !doc.contains("weight") || !doc.contains("entries"))
        throw format_error("table must be an object with \"weight\" and \"entries\"");
    if (!doc["weight"].is_number_integer())
        throw format_error("\"weight\" must be an integer");
    CoefficientTable table;
    table.k = doc["weight"].get<int>();
    if (table.k < 4 || table.k % 2 != 0)
        throw format_error("\"weight\" must be even and >= 4");
    if (!doc["entries"].is_array())
        throw format_error("\"entries\" must be an array");

    std::size_t index = 0;
    for (const auto& item : doc["entries"]) {
        ++index;
        const std::string where = "entry #" + std::to_string(index);
        if (!item.is_object() || !item.contains("a") || !item.contains("b") ||
            !item.contains("c") || !item.contains("value"))
            throw format_error(where + ": need integer a, b, c and string value");
        if (!item["a"].is_number_integer() || !item["b"].is_number_integer() ||
            !item["c"].is_number_integer() || !item["value"].is_string())
            throw format_error(where + ": need integer a, b, c and string value");
        QForm f{item["a"].get<std::int64_t>(), item["b"].get<std::int64_t>(),
                item["c"].get<std::int64_t>()};
        if (!f.reduced())
            throw format_error(where + ": form is not reduced positive definite");
        Rational v;
        try {
            v = parse_rational(item["value"].get<std::string>());
        } catch (const std::invalid_argument& e) {
            throw format_error(where + ": " + e.what());
        }
        if (!table.entries.emplace(f, std::move(v)).second)
            throw format_error(where + ": duplicate class");
    }
    return table;
}

void save_table(const CoefficientTable& table, const std::string& path) {
    std::ofstream out(path);
    if (!out)
        throw std::runtime_error("cannot open for writing: " + path);
    out << table_to_json(table) << "\n";
    if (!out)
        throw std::runtime_error("write failed: " + path);
}

CoefficientTable load_table(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw format_error("cannot open table file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return table_from_json(buf.str());
}

} // namespace skmaass
