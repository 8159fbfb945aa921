#include "qbound/witness_io.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "qbound/errors.hpp"
#include "qbound/rational.hpp"

namespace qbound {

using json = nlohmann::ordered_json;
using measures::DistanceScheme;
using measures::DistributionFamily;
using measures::Rank1Witness;
using measures::RelationalWitness;
using measures::WeightScheme;
using ratlp::Rational;

namespace {

json parse_json(std::string_view text) {
    json doc = json::parse(text, nullptr, /*allow_exceptions=*/false);
    if (doc.is_discarded()) throw SyntaxError("witness file is not valid JSON");
    return doc;
}

const json& field(const json& obj, const char* key) {
    if (!obj.is_object() || !obj.contains(key))
        throw SyntaxError(std::string("witness file misses field '") + key + "'");
    return obj.at(key);
}

std::string string_field(const json& obj, const char* key) {
    const json& v = field(obj, key);
    if (!v.is_string()) throw SyntaxError(std::string("field '") + key + "' must be a string");
    return v.get<std::string>();
}

Rational rational_field(const json& obj, const char* key) {
    return ratlp::parse_rational(string_field(obj, key));
}

Word word_field(const json& obj, const char* key, const PartialFunction& f) {
    return word_from_string(string_field(obj, key), f.arity(), f.input_alphabet());
}

long long int_field(const json& obj, const char* key) {
    const json& v = field(obj, key);
    if (!v.is_number_integer()) throw SyntaxError(std::string("field '") + key + "' must be an integer");
    return v.get<long long>();
}

json rational_str(const Rational& r) { return json(ratlp::to_string(r)); }

}  // namespace

WitnessDocument parse_witness(std::string_view text, const PartialFunction& f) {
    json doc = parse_json(text);
    std::string type = string_field(doc, "type");

    if (type == "relational") {
        RelationalWitness w;
        for (const json& entry : field(doc, "pairs"))
            w.set(word_field(entry, "x", f), word_field(entry, "y", f),
                  rational_field(entry, "r"));
        return w;
    }
    if (type == "weighted") {
        WeightScheme w;
        for (const json& entry : field(doc, "pairs"))
            w.set_pair(word_field(entry, "x", f), word_field(entry, "y", f),
                       rational_field(entry, "w"));
        for (const json& entry : field(doc, "triples")) {
            long long i = int_field(entry, "i");
            if (i < 1 || i > f.arity())
                throw SyntaxError("triple index out of range [1, n]");
            w.set_triple(word_field(entry, "x", f), word_field(entry, "y", f),
                         static_cast<int>(i - 1), rational_field(entry, "w"));
        }
        return w;
    }
    if (type == "mm") {
        DistributionFamily w;
        for (const json& entry : field(doc, "distributions")) {
            const json& vec = field(entry, "p");
            if (!vec.is_array() || vec.size() != static_cast<std::size_t>(f.arity()))
                throw SyntaxError("distribution vectors must list n rationals");
            std::vector<Rational> p;
            p.reserve(vec.size());
            for (const json& e : vec) {
                if (!e.is_string()) throw SyntaxError("distribution entries must be rational strings");
                p.push_back(ratlp::parse_rational(e.get<std::string>()));
            }
            w.per_input[word_field(entry, "x", f)] = std::move(p);
        }
        return w;
    }
    if (type == "rank1") {
        Rank1Witness w;
        auto outputs = [&](const char* key) {
            std::vector<int> out;
            const json& arr = field(doc, key);
            if (!arr.is_array()) throw SyntaxError(std::string("field '") + key + "' must be an array");
            for (const json& e : arr) {
                if (!e.is_number_integer()) throw SyntaxError("output symbols must be integers");
                out.push_back(e.get<int>());
            }
            return out;
        };
        w.outputs_a = outputs("a");
        w.outputs_b = outputs("b");
        for (const json& entry : field(doc, "p"))
            w.p[word_field(entry, "x", f)] = rational_field(entry, "w");
        for (const json& entry : field(doc, "q"))
            w.q[word_field(entry, "x", f)] = rational_field(entry, "w");
        return w;
    }
    if (type == "distance") {
        DistanceScheme w;
        for (const json& entry : field(doc, "pairs")) {
            long long d = int_field(entry, "d");
            w.pairs[{word_field(entry, "x", f), word_field(entry, "y", f)}] = d;
        }
        return w;
    }
    throw SyntaxError("unknown witness type '" + type + "'");
}

namespace {

json serialize_impl(const RelationalWitness& w) {
    json pairs = json::array();
    for (const auto& [key, r] : w.pairs)
        pairs.push_back({{"x", word_to_string(key.first)},
                         {"y", word_to_string(key.second)},
                         {"r", rational_str(r)}});
    return json{{"type", "relational"}, {"pairs", pairs}};
}

json serialize_impl(const WeightScheme& w) {
    json pairs = json::array();
    for (const auto& [key, value] : w.pairs)
        pairs.push_back({{"x", word_to_string(key.first)},
                         {"y", word_to_string(key.second)},
                         {"w", rational_str(value)}});
    json triples = json::array();
    for (const auto& [key, value] : w.triples)
        triples.push_back({{"x", word_to_string(std::get<0>(key))},
                           {"y", word_to_string(std::get<1>(key))},
                           {"i", std::get<2>(key) + 1},
                           {"w", rational_str(value)}});
    return json{{"type", "weighted"}, {"pairs", pairs}, {"triples", triples}};
}

json serialize_impl(const DistributionFamily& w) {
    json dists = json::array();
    for (const auto& [x, p] : w.per_input) {
        json vec = json::array();
        for (const auto& e : p) vec.push_back(rational_str(e));
        dists.push_back({{"x", word_to_string(x)}, {"p", vec}});
    }
    return json{{"type", "mm"}, {"distributions", dists}};
}

json serialize_impl(const Rank1Witness& w) {
    json p = json::array(), q = json::array();
    for (const auto& [x, weight] : w.p)
        p.push_back({{"x", word_to_string(x)}, {"w", rational_str(weight)}});
    for (const auto& [x, weight] : w.q)
        q.push_back({{"x", word_to_string(x)}, {"w", rational_str(weight)}});
    return json{{"type", "rank1"},
                {"a", w.outputs_a},
                {"b", w.outputs_b},
                {"p", p},
                {"q", q}};
}

json serialize_impl(const DistanceScheme& w) {
    json pairs = json::array();
    for (const auto& [key, d] : w.pairs)
        pairs.push_back({{"x", word_to_string(key.first)},
                         {"y", word_to_string(key.second)},
                         {"d", d}});
    return json{{"type", "distance"}, {"pairs", pairs}};
}

}  // namespace

std::string serialize_witness(const WitnessDocument& witness) {
    json doc = std::visit([](const auto& w) { return serialize_impl(w); }, witness);
    return doc.dump(2) + "\n";
}

const char* witness_type_name(const WitnessDocument& witness) {
    static constexpr const char* names[] = {"relational", "weighted", "mm", "rank1", "distance"};
    return names[witness.index()];
}

WitnessDocument read_witness_file(const std::string& path, const PartialFunction& f) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error("cannot open witness file '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_witness(buf.str(), f);
}

}  // namespace qbound
