#include "adp/instance_io.hpp"

#include <algorithm>
#include <istream>
#include <sstream>

#include <json.hpp>

namespace adp {

namespace {

constexpr const char* kFormatTag = "alldiffprec";
constexpr int kFormatVersion = 1;

bool valid_name(const std::string& name) {
    if (name.empty()) return false;
    if (!std::isalpha(static_cast<unsigned char>(name[0])) && name[0] != '_') return false;
    for (char ch : name)
        if (!std::isalnum(static_cast<unsigned char>(ch)) && ch != '_') return false;
    return true;
}

InstanceDoc parse_instance_json(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("bad JSON instance: ") + e.what());
    }
    InstanceDoc doc;
    if (j.value("version", 0) != kFormatVersion) throw ParseError("unsupported version");
    for (const auto& v : j.at("variables")) {
        const std::string name = v.at("name").get<std::string>();
        if (!valid_name(name) || doc.var_index(name) >= 0)
            throw ParseError("bad or duplicate variable name: " + name);
        doc.names.push_back(name);
        if (v.contains("range")) {
            const int64_t lo = v.at("range").at(0).get<int64_t>();
            const int64_t hi = v.at("range").at(1).get<int64_t>();
            if (lo > hi) throw ParseError("empty range for " + name);
            std::vector<int64_t> vals;
            for (int64_t x = lo; x <= hi; ++x) vals.push_back(x);
            doc.domains.push_back(std::move(vals));
            doc.is_range.push_back(true);
        } else {
            auto vals = v.at("values").get<std::vector<int64_t>>();
            if (vals.empty()) throw ParseError("empty value list for " + name);
            doc.domains.push_back(std::move(vals));
            doc.is_range.push_back(false);
        }
    }
    if (j.contains("precedences"))
        for (const auto& e : j.at("precedences")) {
            const int a = doc.var_index(e.at(0).get<std::string>());
            const int b = doc.var_index(e.at(1).get<std::string>());
            if (a < 0 || b < 0) throw ParseError("precedence references unknown variable");
            doc.precedences.emplace_back(a, b);
        }
    if (j.contains("meta"))
        for (auto it = j.at("meta").begin(); it != j.at("meta").end(); ++it)
            doc.meta[it.key()] = it.value().get<std::string>();
    for (auto& vals : doc.domains) {
        std::sort(vals.begin(), vals.end());
        vals.erase(std::unique(vals.begin(), vals.end()), vals.end());
    }
    return doc;
}

} // namespace

int InstanceDoc::var_index(const std::string& name) const {
    for (size_t i = 0; i < names.size(); ++i)
        if (names[i] == name) return static_cast<int>(i);
    return -1;
}

InstanceDoc doc_from_instance(const Instance& inst, std::vector<std::string> names) {
    InstanceDoc doc;
    if (names.empty())
        for (int i = 0; i < inst.size(); ++i) names.push_back("x" + std::to_string(i + 1));
    check_invariant(static_cast<int>(names.size()) == inst.size(), "name count mismatch");
    doc.names = std::move(names);
    for (int i = 0; i < inst.size(); ++i) {
        const auto& dom = inst.domains[static_cast<size_t>(i)];
        std::vector<int64_t> raw;
        raw.reserve(static_cast<size_t>(dom.size()));
        for (int v : dom.values()) raw.push_back(inst.denormalize(v));
        doc.is_range.push_back(dom.size() == dom.max() - dom.min() + 1);
        doc.domains.push_back(std::move(raw));
    }
    doc.precedences = inst.graph.edges();
    return doc;
}

InstanceDoc parse_instance(std::istream& in) {
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return parse_instance_text(buffer.str());
}

InstanceDoc parse_instance_text(const std::string& text) {
    const auto first = text.find_first_not_of(" \t\r\n");
    if (first != std::string::npos && text[first] == '{') return parse_instance_json(text);

    InstanceDoc doc;
    std::istringstream in(text);
    std::string line;
    bool header_seen = false;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        const auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        std::istringstream ls(line);
        std::string word;
        if (!(ls >> word)) continue;
        auto bad = [&](const std::string& msg) {
            throw ParseError("line " + std::to_string(line_no) + ": " + msg);
        };
        if (!header_seen) {
            int version = 0;
            if (word != kFormatTag || !(ls >> version) || version != kFormatVersion)
                bad("expected header '" + std::string(kFormatTag) + " 1'");
            header_seen = true;
            continue;
        }
        if (word == "var") {
            std::string name, kind;
            if (!(ls >> name >> kind)) bad("var needs a name and a kind");
            if (!valid_name(name) || doc.var_index(name) >= 0) bad("bad or duplicate name");
            doc.names.push_back(name);
            if (kind == "range") {
                int64_t lo, hi;
                if (!(ls >> lo >> hi)) bad("range needs two bounds");
                if (lo > hi) bad("empty range");
                std::vector<int64_t> vals;
                for (int64_t x = lo; x <= hi; ++x) vals.push_back(x);
                doc.domains.push_back(std::move(vals));
                doc.is_range.push_back(true);
            } else if (kind == "set") {
                std::vector<int64_t> vals;
                int64_t x;
                while (ls >> x) vals.push_back(x);
                if (vals.empty()) bad("set needs at least one value");
                doc.domains.push_back(std::move(vals));
                doc.is_range.push_back(false);
            } else {
                bad("unknown domain kind '" + kind + "'");
            }
        } else if (word == "prec") {
            std::string a, b;
            if (!(ls >> a >> b)) bad("prec needs two names");
            const int ia = doc.var_index(a), ib = doc.var_index(b);
            if (ia < 0 || ib < 0) bad("prec references unknown variable");
            doc.precedences.emplace_back(ia, ib);
        } else if (word == "meta") {
            std::string key, value;
            if (!(ls >> key)) bad("meta needs a key");
            std::getline(ls, value);
            const auto start = value.find_first_not_of(" \t");
            doc.meta[key] = start == std::string::npos ? "" : value.substr(start);
        } else {
            bad("unknown directive '" + word + "'");
        }
    }
    if (!header_seen) throw ParseError("missing format header");
    if (doc.names.empty()) throw ParseError("instance has no variables");
    for (auto& vals : doc.domains) {
        std::sort(vals.begin(), vals.end());
        vals.erase(std::unique(vals.begin(), vals.end()), vals.end());
    }
    return doc;
}

std::string serialize_instance(const InstanceDoc& doc) {
    std::ostringstream out;
    out << kFormatTag << " " << kFormatVersion << "\n";
    for (auto& [key, value] : doc.meta) out << "meta " << key << " " << value << "\n";
    for (size_t i = 0; i < doc.names.size(); ++i) {
        const auto& vals = doc.domains[i];
        const bool contiguous =
            static_cast<int64_t>(vals.size()) == vals.back() - vals.front() + 1;
        out << "var " << doc.names[i];
        if (doc.is_range[i] && contiguous) {
            out << " range " << vals.front() << " " << vals.back();
        } else {
            out << " set";
            for (int64_t v : vals) out << " " << v;
        }
        out << "\n";
    }
    auto sorted = doc.precedences;
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
    for (auto [a, b] : sorted)
        out << "prec " << doc.names[static_cast<size_t>(a)] << " "
            << doc.names[static_cast<size_t>(b)] << "\n";
    return out.str();
}

std::string serialize_instance_json(const InstanceDoc& doc) {
    nlohmann::json j;
    j["version"] = kFormatVersion;
    j["variables"] = nlohmann::json::array();
    for (size_t i = 0; i < doc.names.size(); ++i) {
        nlohmann::json v;
        v["name"] = doc.names[i];
        const auto& vals = doc.domains[i];
        const bool contiguous =
            static_cast<int64_t>(vals.size()) == vals.back() - vals.front() + 1;
        if (doc.is_range[i] && contiguous) v["range"] = {vals.front(), vals.back()};
        else v["values"] = vals;
        j["variables"].push_back(std::move(v));
    }
    j["precedences"] = nlohmann::json::array();
    auto sorted = doc.precedences;
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
    for (auto [a, b] : sorted)
        j["precedences"].push_back({doc.names[static_cast<size_t>(a)],
                                    doc.names[static_cast<size_t>(b)]});
    if (!doc.meta.empty()) j["meta"] = doc.meta;
    return j.dump(2);
}

} // namespace adp
