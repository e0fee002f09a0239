#include "pdfa/io.hpp"

#include <fstream>
#include <map>
#include <sstream>

#include "json.hpp"

namespace pdfa::io {

using json = nlohmann::ordered_json;

namespace {

std::int64_t as_id(const json& v, const char* what) {
    if (!v.is_number_integer()) throw InputError(std::string(what) + " must be an integer");
    return v.get<std::int64_t>();
}

}  // namespace

Pdfa from_json(std::string_view text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& e) {
        throw InputError(std::string("malformed PDFA JSON: ") + e.what());
    }
    if (!doc.is_object()) throw InputError("PDFA JSON must be an object");
    for (const char* key : {"alphabet", "initial", "states"}) {
        if (!doc.contains(key)) throw InputError(std::string("PDFA JSON lacks \"") + key + "\"");
    }
    if (!doc["alphabet"].is_array()) throw InputError("\"alphabet\" must be an array");
    std::vector<std::string> symbols;
    for (const auto& s : doc["alphabet"]) {
        if (!s.is_string()) throw InputError("alphabet entries must be strings");
        symbols.push_back(s.get<std::string>());
    }
    Alphabet alphabet(std::move(symbols));

    const auto& states = doc["states"];
    if (!states.is_array() || states.empty()) throw InputError("\"states\" must be a non-empty array");

    std::map<std::int64_t, StateId> dense;
    for (const auto& st : states) {
        if (!st.is_object() || !st.contains("id")) throw InputError("every state needs an \"id\"");
        const auto id = as_id(st["id"], "state id");
        if (!dense.emplace(id, static_cast<StateId>(dense.size())).second)
            throw InputError("duplicate state id " + std::to_string(id));
    }
    auto lookup = [&](std::int64_t id) {
        auto it = dense.find(id);
        // Dangling targets are kept out of range so validate() reports them.
        return it == dense.end() ? static_cast<StateId>(dense.size()) : it->second;
    };

    Pdfa a(alphabet, dense.size(), lookup(as_id(doc["initial"], "\"initial\"")));
    for (const auto& st : states) {
        const StateId q = dense.at(as_id(st["id"], "state id"));
        std::vector<double> probs(alphabet.layout_size(), 0.0);
        if (st.contains("dist")) {
            if (!st["dist"].is_object()) throw InputError("\"dist\" must be an object");
            for (const auto& [key, val] : st["dist"].items()) {
                if (!val.is_number()) throw InputError("probabilities must be numbers");
                const Letter l = key == "$" ? kTerminal : letter_of(alphabet.index_of(key));
                probs[l] = val.get<double>();
            }
        }
        a.set_dist(q, Distribution(std::move(probs)));
        if (st.contains("trans")) {
            if (!st["trans"].is_object()) throw InputError("\"trans\" must be an object");
            for (const auto& [key, val] : st["trans"].items()) {
                a.set_next(q, alphabet.index_of(key), lookup(as_id(val, "transition target")));
            }
        }
    }
    require_valid(a);
    return a;
}

std::string to_json(const Pdfa& a) {
    json doc;
    doc["alphabet"] = a.alphabet().symbols();
    doc["initial"] = a.initial();
    json states = json::array();
    for (StateId q = 0; q < a.num_states(); ++q) {
        json st;
        st["id"] = q;
        json dist = json::object();
        for (Letter l = 0; l < a.alphabet().layout_size(); ++l)
            dist[a.alphabet().letter_name(l)] = a.dist(q).at(l);
        st["dist"] = std::move(dist);
        json trans = json::object();
        for (Symbol s = 0; s < a.num_symbols(); ++s) trans[a.alphabet().name(s)] = a.next(q, s);
        st["trans"] = std::move(trans);
        states.push_back(std::move(st));
    }
    doc["states"] = std::move(states);
    return doc.dump(2) + "\n";
}

Pdfa read_json_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw InputError("cannot open " + path.string());
    std::ostringstream buf;
    buf << in.rdbuf();
    return from_json(buf.str());
}

void write_text_file(const std::filesystem::path& path, std::string_view text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw InputError("cannot write " + path.string());
    out << text;
    if (!out) throw InputError("failed writing " + path.string());
}

void write_json_file(const Pdfa& a, const std::filesystem::path& path) {
    write_text_file(path, to_json(a));
}

namespace {

std::string quote(const std::string& s) {
    std::string out = "\"";
    for (char c : s) {
        if (c == '"' || c == '\\') out += '\\';
        out += c;
    }
    return out + '"';
}

}  // namespace

std::string to_dot(const Pdfa& a) {
    std::ostringstream os;
    os << "digraph pdfa {\n  rankdir=LR;\n  node [shape=circle];\n";
    os << "  start [shape=point];\n  start -> q" << a.initial() << ";\n";
    for (StateId q = 0; q < a.num_states(); ++q) {
        os << "  q" << q << " [label=\"q" << q << "\\n$:" << a.dist(q).at(kTerminal) << "\"];\n";
    }
    for (StateId q = 0; q < a.num_states(); ++q) {
        for (Symbol s = 0; s < a.num_symbols(); ++s) {
            std::ostringstream label;
            label << a.alphabet().name(s) << '/' << a.dist(q).at(letter_of(s));
            os << "  q" << q << " -> q" << a.next(q, s) << " [label=" << quote(label.str()) << "];\n";
        }
    }
    os << "}\n";
    return os.str();
}

}  // namespace pdfa::io
