#include "tiercomb/json_io.hpp"

#include <sstream>
#include <stdexcept>

namespace tiercomb {

namespace {

using nlohmann::json;

void require_object(const json& j, const char* what) {
    if (!j.is_object()) {
        throw std::invalid_argument(std::string(what) + ": expected a JSON object");
    }
}

std::vector<int> int_array(const json& j, const char* key) {
    if (!j.contains(key) || !j.at(key).is_array()) {
        throw std::invalid_argument(std::string("missing or non-array field \"") + key + "\"");
    }
    std::vector<int> out;
    for (const auto& e : j.at(key)) {
        if (!e.is_number_integer()) {
            throw std::invalid_argument(std::string("field \"") + key +
                                        "\" must contain integers");
        }
        out.push_back(e.get<int>());
    }
    return out;
}

int int_field(const json& j, const char* key) {
    if (!j.contains(key) || !j.at(key).is_number_integer()) {
        throw std::invalid_argument(std::string("missing or non-integer field \"") + key + "\"");
    }
    return j.at(key).get<int>();
}

void check_length(size_t got, int declared, const char* key) {
    if (static_cast<int>(got) != declared) {
        throw std::invalid_argument(std::string("field \"") + key +
                                    "\" length disagrees with \"n\"");
    }
}

}  // namespace

json tree_to_json(const TieredRootedTree& t) {
    return json{{"n", t.size()}, {"parent", t.parent}, {"w", t.w}, {"lv", t.lv}};
}

TieredRootedTree tree_from_json(const json& j) {
    require_object(j, "tree");
    const int n = int_field(j, "n");
    if (n < 0) throw std::invalid_argument("\"n\" must be >= 0");
    TieredRootedTree t{int_array(j, "parent"), int_array(j, "w"), int_array(j, "lv")};
    check_length(t.parent.size(), n, "parent");
    check_length(t.w.size(), n, "w");
    check_length(t.lv.size(), n, "lv");
    return t;
}

json path_to_json(const LabelledDyckPath2& p) {
    return json{{"n", p.size()}, {"steps", p.steps}, {"pix", p.pix}, {"piy", p.piy}};
}

LabelledDyckPath2 path_from_json(const json& j) {
    require_object(j, "path");
    const int n = int_field(j, "n");
    if (n < 0) throw std::invalid_argument("\"n\" must be >= 0");
    if (!j.contains("steps") || !j.at("steps").is_string()) {
        throw std::invalid_argument("missing or non-string field \"steps\"");
    }
    LabelledDyckPath2 p{j.at("steps").get<std::string>(), int_array(j, "pix"),
                        int_array(j, "piy")};
    check_length(p.pix.size(), n, "pix");
    check_length(p.piy.size(), n, "piy");
    check_length(p.steps.size(), 2 * n, "steps");
    return p;
}

json pair_to_json(const SequencePair& sp) {
    return json{{"a", sp.a}, {"b", sp.b}};
}

SequencePair pair_from_json(const json& j) {
    require_object(j, "sequence pair");
    SequencePair sp{int_array(j, "a"), int_array(j, "b")};
    if (sp.a.size() != sp.b.size()) {
        throw std::invalid_argument("\"a\" and \"b\" lengths differ");
    }
    return sp;
}

json composition_to_json(const WeakComposition& c) { return json(c.entries()); }

WeakComposition composition_from_json(const json& j) {
    if (!j.is_array()) throw std::invalid_argument("composition: expected a JSON array");
    std::vector<int> entries;
    for (const auto& e : j) {
        if (!e.is_number_integer()) {
            throw std::invalid_argument("composition entries must be integers");
        }
        entries.push_back(e.get<int>());
    }
    return WeakComposition(std::move(entries));
}

json polynomial_to_json(const GenPolynomial& p) {
    json terms = json::array();
    for (const auto& [key, coeff] : p.terms()) {
        terms.push_back(json{{"coef", coeff}, {"q", key.q}, {"x", key.x}, {"y", key.y}});
    }
    return json{{"nx", p.nx()}, {"ny", p.ny()}, {"terms", std::move(terms)}};
}

GenPolynomial polynomial_from_json(const json& j) {
    require_object(j, "polynomial");
    GenPolynomial p(int_field(j, "nx"), int_field(j, "ny"));
    if (!j.contains("terms") || !j.at("terms").is_array()) {
        throw std::invalid_argument("missing or non-array field \"terms\"");
    }
    for (const auto& term : j.at("terms")) {
        require_object(term, "term");
        if (!term.contains("coef") || !term.at("coef").is_number_integer()) {
            throw std::invalid_argument("missing or non-integer field \"coef\"");
        }
        p.add(GenPolynomial::Term{int_field(term, "q"), int_array(term, "x"),
                                  int_array(term, "y")},
              term.at("coef").get<long long>());
    }
    return p;
}

namespace {

std::string join_csv(const std::vector<int>& v) {
    std::string s;
    for (size_t i = 0; i < v.size(); ++i) {
        if (i) s += ',';
        s += std::to_string(v[i]);
    }
    return s;
}

std::vector<int> split_csv(const std::string& s) {
    std::vector<int> out;
    if (s.empty()) return out;
    std::istringstream in(s);
    std::string item;
    while (std::getline(in, item, ',')) {
        size_t pos = 0;
        int value = 0;
        try {
            value = std::stoi(item, &pos);
        } catch (const std::exception&) {
            throw std::invalid_argument("non-integer entry \"" + item + "\"");
        }
        if (pos != item.size()) {
            throw std::invalid_argument("non-integer entry \"" + item + "\"");
        }
        out.push_back(value);
    }
    return out;
}

}  // namespace

std::string tree_to_text(const TieredRootedTree& t) {
    return join_csv(t.parent) + ";" + join_csv(t.w) + ";" + join_csv(t.lv);
}

TieredRootedTree tree_from_text(const std::string& line) {
    const size_t first = line.find(';');
    const size_t second = first == std::string::npos ? std::string::npos
                                                     : line.find(';', first + 1);
    if (second == std::string::npos || line.find(';', second + 1) != std::string::npos) {
        throw std::invalid_argument("tree text form needs exactly two ';' separators");
    }
    TieredRootedTree t{split_csv(line.substr(0, first)),
                       split_csv(line.substr(first + 1, second - first - 1)),
                       split_csv(line.substr(second + 1))};
    if (t.w.size() != t.parent.size() || t.lv.size() != t.parent.size()) {
        throw std::invalid_argument("tree text form sections have different lengths");
    }
    return t;
}

}  // namespace tiercomb
