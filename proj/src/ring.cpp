#include "quadres/ring.hpp"

#include <algorithm>
#include <fstream>
#include <numeric>
#include <sstream>

#include <json.hpp>

namespace quadres {

int Monomial::degree() const {
    return std::accumulate(exponents.begin(), exponents.end(), 0);
}

Monomial Monomial::times_var(int i) const {
    Monomial m = *this;
    m.exponents[static_cast<std::size_t>(i) - 1] += 1;
    return m;
}

Monomial Monomial::var(int num_vars, int i) {
    Monomial m = one(num_vars);
    m.exponents[static_cast<std::size_t>(i) - 1] = 1;
    return m;
}

std::string Monomial::to_string() const {
    std::string s;
    for (int i = 1; i <= num_vars(); ++i) {
        const int e = exponent(i);
        if (e == 0) continue;
        if (!s.empty()) s += "*";
        s += "x" + std::to_string(i);
        if (e > 1) s += "^" + std::to_string(e);
    }
    return s.empty() ? "1" : s;
}

bool RingSpec::kills(int i, int j) const {
    if (i > j) std::swap(i, j);
    return std::binary_search(generators.begin(), generators.end(), std::make_pair(i, j));
}

std::string RingSpec::to_string() const {
    std::string s = "k[x1..x" + std::to_string(num_vars) + "]/(";
    for (std::size_t k = 0; k < generators.size(); ++k) {
        if (k) s += ", ";
        s += "x" + std::to_string(generators[k].first) + "x" + std::to_string(generators[k].second);
    }
    return s + ")";
}

RingSpec normalize_spec(std::vector<std::pair<int, int>> raw_pairs, int num_vars) {
    if (num_vars < 1) throw InvalidInputError("ring needs at least one variable");
    for (auto& [i, j] : raw_pairs) {
        if (i < 1 || i > num_vars || j < 1 || j > num_vars)
            throw InvalidInputError("generator index out of range 1.." + std::to_string(num_vars) +
                                    ": (" + std::to_string(i) + "," + std::to_string(j) + ")");
        if (i > j) std::swap(i, j);
    }
    std::sort(raw_pairs.begin(), raw_pairs.end());
    raw_pairs.erase(std::unique(raw_pairs.begin(), raw_pairs.end()), raw_pairs.end());
    return RingSpec{num_vars, std::move(raw_pairs)};
}

bool is_admissible(const RingSpec& spec, const Monomial& m) {
    for (const auto& [i, j] : spec.generators) {
        if (i == j) {
            if (m.exponent(i) >= 2) return false;
        } else if (m.exponent(i) >= 1 && m.exponent(j) >= 1) {
            return false;
        }
    }
    return true;
}

std::optional<Monomial> reduce_monomial(const RingSpec& spec, const Monomial& m) {
    if (is_admissible(spec, m)) return m;
    return std::nullopt;
}

namespace {

void enumerate_rec(const RingSpec& spec, int pos, int remaining, Monomial& work,
                   std::vector<Monomial>& out) {
    if (pos == spec.num_vars - 1) {
        work.exponents[static_cast<std::size_t>(pos)] = remaining;
        if (is_admissible(spec, work)) out.push_back(work);
        work.exponents[static_cast<std::size_t>(pos)] = 0;
        return;
    }
    for (int e = remaining; e >= 0; --e) {
        work.exponents[static_cast<std::size_t>(pos)] = e;
        enumerate_rec(spec, pos + 1, remaining - e, work, out);
    }
    work.exponents[static_cast<std::size_t>(pos)] = 0;
}

}  // namespace

std::vector<Monomial> enumerate_basis(const RingSpec& spec, int degree) {
    if (degree < 0) return {};
    std::vector<Monomial> out;
    Monomial work = Monomial::one(spec.num_vars);
    enumerate_rec(spec, 0, degree, work, out);
    return out;
}

std::vector<int> hilbert_function(const RingSpec& spec, int max_degree) {
    std::vector<int> dims;
    dims.reserve(static_cast<std::size_t>(max_degree) + 1);
    for (int d = 0; d <= max_degree; ++d)
        dims.push_back(static_cast<int>(enumerate_basis(spec, d).size()));
    return dims;
}

RingElement RingElement::from_monomial(FieldChoice field, const Monomial& m, long coeff) {
    RingElement r(field);
    r.add_term(m, FieldScalar::from_int(field, coeff));
    return r;
}

void RingElement::add_term(const Monomial& m, const FieldScalar& c) {
    if (c.is_zero()) return;
    auto it = terms_.find(m);
    if (it == terms_.end()) {
        terms_.emplace(m, c);
        return;
    }
    it->second = it->second + c;
    if (it->second.is_zero()) terms_.erase(it);
}

std::string RingElement::to_string() const {
    if (terms_.empty()) return "0";
    std::string s;
    for (const auto& [m, c] : terms_) {
        if (!s.empty()) s += " + ";
        s += c.to_string() + "*" + m.to_string();
    }
    return s;
}

bool RingElement::operator==(const RingElement& o) const {
    return field_ == o.field_ && terms_ == o.terms_;
}

RingElement add(const RingElement& a, const RingElement& b) {
    if (!(a.field() == b.field()))
        throw FieldMismatchError("cannot add elements over " + a.field().to_string() + " and " +
                                 b.field().to_string());
    RingElement r = a;
    for (const auto& [m, c] : b.terms()) r.add_term(m, c);
    return r;
}

RingElement multiply(const RingSpec& spec, const RingElement& a, const RingElement& b) {
    if (!(a.field() == b.field()))
        throw FieldMismatchError("cannot multiply elements over " + a.field().to_string() +
                                 " and " + b.field().to_string());
    RingElement r(a.field());
    for (const auto& [ma, ca] : a.terms()) {
        for (const auto& [mb, cb] : b.terms()) {
            Monomial prod = ma;
            for (int i = 0; i < prod.num_vars(); ++i)
                prod.exponents[static_cast<std::size_t>(i)] +=
                    mb.exponents[static_cast<std::size_t>(i)];
            if (auto reduced = reduce_monomial(spec, prod)) r.add_term(*reduced, ca * cb);
        }
    }
    return r;
}

RingSpec ring_spec_from_json(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw InvalidInputError(std::string("bad ring spec JSON: ") + e.what());
    }
    if (!j.is_object() || !j.contains("variables") || !j.contains("generators"))
        throw InvalidInputError("ring spec JSON needs 'variables' and 'generators'");
    if (!j["variables"].is_number_integer())
        throw InvalidInputError("'variables' must be an integer");
    const int n = j["variables"].get<int>();
    std::vector<std::pair<int, int>> pairs;
    for (const auto& g : j["generators"]) {
        if (!g.is_array() || g.size() != 2 || !g[0].is_number_integer() || !g[1].is_number_integer())
            throw InvalidInputError("each generator must be a pair [i, j]");
        pairs.emplace_back(g[0].get<int>(), g[1].get<int>());
    }
    return normalize_spec(std::move(pairs), n);
}

std::string ring_spec_to_json(const RingSpec& spec) {
    nlohmann::json j;
    j["variables"] = spec.num_vars;
    j["generators"] = nlohmann::json::array();
    for (const auto& [i, k] : spec.generators) j["generators"].push_back({i, k});
    return j.dump(2) + "\n";
}

RingSpec load_ring_spec(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InvalidInputError("cannot open ring spec file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return ring_spec_from_json(buf.str());
}

}  // namespace quadres
