#include "ballotpath/table_io.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>
#include <vector>

#include <json.hpp>

namespace ballot {

OutputFormat format_from_name(std::string_view name) {
    if (name == "grid") return OutputFormat::text_grid;
    if (name == "csv") return OutputFormat::csv;
    if (name == "json") return OutputFormat::json;
    throw std::invalid_argument("unknown output format: " + std::string(name) +
                                " (expected grid, csv, or json)");
}

std::string render_grid(const CountTable& t) {
    std::ostringstream out;
    out << "pattern " << t.pattern_text << "  class " << t.class_label << "  l=" << t.l()
        << "  builder=" << t.builder << "\n";

    // Column widths: wide enough for the header n and every value below it.
    std::vector<size_t> width(static_cast<size_t>(t.n_max()) + 1);
    size_t label_width = std::to_string(t.m_max()).size();
    for (int n = 0; n <= t.n_max(); ++n) {
        size_t w = std::to_string(n).size();
        for (int m = 0; m <= t.m_max(); ++m)
            w = std::max(w, t.at(n, m).str().size());
        width[static_cast<size_t>(n)] = w;
    }

    auto pad = [&out](const std::string& s, size_t w) {
        for (size_t i = s.size(); i < w; ++i) out << ' ';
        out << s;
    };

    pad("m\\n", label_width + 3);
    for (int n = 0; n <= t.n_max(); ++n) {
        out << "  ";
        pad(std::to_string(n), width[static_cast<size_t>(n)]);
    }
    out << "\n";

    for (int m = t.m_max(); m >= 0; --m) {
        pad(std::to_string(m), label_width + 3);
        for (int n = 0; n <= t.n_max(); ++n) {
            out << "  ";
            pad(t.at(n, m).str(), width[static_cast<size_t>(n)]);
        }
        out << "\n";
    }
    return out.str();
}

std::string render_csv(const CountTable& t) {
    std::ostringstream out;
    out << "# pattern=" << t.pattern_text << "\n";
    out << "# class=" << t.class_label << "\n";
    out << "# l=" << t.l() << "\n";
    out << "# builder=" << t.builder << "\n";
    out << "# n_max=" << t.n_max() << "\n";
    out << "# m_max=" << t.m_max() << "\n";
    out << "n,m,value,region\n";
    for (int m = t.m_max(); m >= 0; --m)
        for (int n = 0; n <= t.n_max(); ++n)
            out << n << ',' << m << ',' << t.at(n, m) << ',' << region_name(t.region(n, m))
                << "\n";
    return out.str();
}

namespace {

std::vector<std::string> split(const std::string& line, char sep) {
    std::vector<std::string> parts;
    std::string cur;
    for (char ch : line) {
        if (ch == sep) {
            parts.push_back(cur);
            cur.clear();
        } else {
            cur += ch;
        }
    }
    parts.push_back(cur);
    return parts;
}

int parse_int(const std::string& s, const std::string& what) {
    try {
        size_t used = 0;
        int v = std::stoi(s, &used);
        if (used != s.size()) throw std::invalid_argument(s);
        return v;
    } catch (const std::exception&) {
        throw std::invalid_argument("bad integer for " + what + ": '" + s + "'");
    }
}

}  // namespace

CountTable parse_csv(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    std::map<std::string, std::string> meta;
    bool saw_header = false;
    std::vector<std::vector<std::string>> records;

    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        if (line[0] == '#') {
            std::string body = line.substr(1);
            if (!body.empty() && body[0] == ' ') body.erase(0, 1);
            auto eq = body.find('=');
            if (eq == std::string::npos)
                throw std::invalid_argument("metadata line without '=': " + line);
            meta[body.substr(0, eq)] = body.substr(eq + 1);
            continue;
        }
        if (!saw_header) {
            if (line != "n,m,value,region")
                throw std::invalid_argument("expected header 'n,m,value,region', got: " + line);
            saw_header = true;
            continue;
        }
        auto parts = split(line, ',');
        if (parts.size() != 4) throw std::invalid_argument("expected 4 fields: " + line);
        records.push_back(std::move(parts));
    }

    for (const char* key : {"l", "n_max", "m_max"})
        if (!meta.count(key))
            throw std::invalid_argument(std::string("missing metadata key: ") + key);

    CountTable t(parse_int(meta["n_max"], "n_max"), parse_int(meta["m_max"], "m_max"),
                 parse_int(meta["l"], "l"));
    t.pattern_text = meta.count("pattern") ? meta["pattern"] : "";
    t.class_label = meta.count("class") ? meta["class"] : "";
    t.builder = meta.count("builder") ? meta["builder"] : "";

    for (const auto& rec : records) {
        int n = parse_int(rec[0], "n");
        int m = parse_int(rec[1], "m");
        t.set(n, m, Count(rec[2]), region_from_name(rec[3]));
    }
    return t;
}

std::string render_json(const CountTable& t) {
    nlohmann::json j;
    j["meta"] = {
        {"pattern", t.pattern_text}, {"class", t.class_label}, {"l", t.l()},
        {"builder", t.builder},      {"n_max", t.n_max()},     {"m_max", t.m_max()},
    };
    nlohmann::json cells = nlohmann::json::array();
    for (int m = t.m_max(); m >= 0; --m)
        for (int n = 0; n <= t.n_max(); ++n)
            cells.push_back({{"n", n},
                             {"m", m},
                             {"value", t.at(n, m).str()},
                             {"region", std::string(region_name(t.region(n, m)))}});
    j["cells"] = std::move(cells);
    return j.dump(2) + "\n";
}

CountTable parse_json(const std::string& text) {
    nlohmann::json j = nlohmann::json::parse(text);
    const auto& meta = j.at("meta");
    CountTable t(meta.at("n_max").get<int>(), meta.at("m_max").get<int>(),
                 meta.at("l").get<int>());
    t.pattern_text = meta.at("pattern").get<std::string>();
    t.class_label = meta.at("class").get<std::string>();
    t.builder = meta.at("builder").get<std::string>();
    for (const auto& cell : j.at("cells"))
        t.set(cell.at("n").get<int>(), cell.at("m").get<int>(),
              Count(cell.at("value").get<std::string>()),
              region_from_name(cell.at("region").get<std::string>()));
    return t;
}

std::string render_table(const CountTable& t, OutputFormat format) {
    switch (format) {
        case OutputFormat::text_grid: return render_grid(t);
        case OutputFormat::csv: return render_csv(t);
        case OutputFormat::json: return render_json(t);
    }
    throw std::logic_error("unreachable output format");
}

}  // namespace ballot
