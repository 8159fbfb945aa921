#include "qbound/families.hpp"

#include <algorithm>
#include <array>
#include <numeric>

#include "qbound/errors.hpp"

namespace qbound::gen {

PartialFunction gth(int n) {
    if (n < 2 || n % 2 != 0) throw OddArity("gth needs an even arity >= 2");
    std::map<Word, Symbol> table;
    for (int i = 0; i < n; ++i) {
        Word x(static_cast<std::size_t>(n), 0);
        x[static_cast<std::size_t>(i)] = 1;
        table[x] = i + 1 > n / 2 ? 1 : 0;  // positions are 1-based in the definition
    }
    return PartialFunction(n, 2, 2, std::move(table));
}

PartialFunction osp(int n) {
    if (n < 2 || n % 2 != 0) throw OddArity("osp needs an even arity >= 2");
    std::map<Word, Symbol> table;
    for (int i = 0; i <= n; ++i) {
        Word x(static_cast<std::size_t>(n), 1);
        for (int j = 0; j < i; ++j) x[static_cast<std::size_t>(j)] = 0;
        table[x] = static_cast<Symbol>(i % 2);
    }
    return PartialFunction(n, 2, 2, std::move(table));
}

int osp_index(const Word& x) {
    for (int i = static_cast<int>(x.size()); i >= 1; --i)
        if (x[static_cast<std::size_t>(i - 1)] == 0) return i;
    return 0;
}

namespace {

bool is_prime(int t) {
    if (t < 2) return false;
    for (int d = 2; d * d <= t; ++d)
        if (t % d == 0) return false;
    return true;
}

// Lexicographically least representative of the projective class of v over
// Z_t: scale so the leading nonzero coordinate becomes 1.
std::array<int, 3> normalize_point(std::array<int, 3> v, int t, const std::vector<int>& inverse) {
    for (int k = 0; k < 3; ++k) {
        if (v[static_cast<std::size_t>(k)] == 0) continue;
        int scale = inverse[static_cast<std::size_t>(v[static_cast<std::size_t>(k)])];
        for (int j = 0; j < 3; ++j)
            v[static_cast<std::size_t>(j)] = v[static_cast<std::size_t>(j)] * scale % t;
        break;
    }
    return v;
}

}  // namespace

ProjectivePlane projective_plane(int t) {
    if (!is_prime(t)) throw NotPrime("projective plane order must be prime");
    if (t > 13) throw OrderTooLarge("projective plane orders above 13 are not supported");

    std::vector<int> inverse(static_cast<std::size_t>(t), 0);
    for (int a = 1; a < t; ++a)
        for (int b = 1; b < t; ++b)
            if (a * b % t == 1) inverse[static_cast<std::size_t>(a)] = b;

    std::vector<std::array<int, 3>> points;
    for (int x = 0; x < t; ++x)
        for (int y = 0; y < t; ++y)
            for (int z = 0; z < t; ++z) {
                if (x == 0 && y == 0 && z == 0) continue;
                auto norm = normalize_point({x, y, z}, t, inverse);
                if (norm == std::array<int, 3>{x, y, z}) points.push_back(norm);
            }
    std::sort(points.begin(), points.end());

    ProjectivePlane plane;
    plane.order = t;
    plane.num_points = static_cast<int>(points.size());
    for (const auto& line : points) {  // lines are the normalized coefficient triples
        std::vector<int> incident;
        for (std::size_t p = 0; p < points.size(); ++p) {
            int dot = line[0] * points[p][0] + line[1] * points[p][1] + line[2] * points[p][2];
            if (dot % t == 0) incident.push_back(static_cast<int>(p));
        }
        plane.lines.push_back(std::move(incident));
    }
    return plane;
}

PartialFunction fpp(int t) {
    ProjectivePlane plane = projective_plane(t);
    const int n = plane.num_points;
    std::map<Word, Symbol> table;
    table.emplace(Word(static_cast<std::size_t>(n), 0), 0);
    for (const auto& line : plane.lines) {
        Word y(static_cast<std::size_t>(n), 0);
        for (int p : line) y[static_cast<std::size_t>(p)] = 1;
        table[y] = 1;
    }
    return PartialFunction(n, 2, 2, std::move(table));
}

PartialFunction compose_or(const PartialFunction& f, int k, std::size_t domain_budget) {
    if (f.output_alphabet() != 2)
        throw NonBooleanOutput("OR composition needs a Boolean output alphabet");
    if (k < 1) throw ParameterOutOfRange("OR composition needs k >= 1");
    std::size_t size = 1;
    for (int j = 0; j < k; ++j) {
        if (size > domain_budget / f.domain_size())
            throw DomainBudgetExceeded("composed domain would exceed the budget");
        size *= f.domain_size();
    }

    std::vector<std::pair<Word, Symbol>> entries(f.table().begin(), f.table().end());
    std::map<Word, Symbol> table;
    std::vector<std::size_t> pick(static_cast<std::size_t>(k), 0);
    for (;;) {
        Word w;
        w.reserve(static_cast<std::size_t>(f.arity()) * static_cast<std::size_t>(k));
        Symbol out = 0;
        for (std::size_t j = 0; j < pick.size(); ++j) {
            const auto& [part, value] = entries[pick[j]];
            w.insert(w.end(), part.begin(), part.end());
            out |= value;
        }
        table.emplace(std::move(w), out);
        int j = k - 1;
        while (j >= 0 && pick[static_cast<std::size_t>(j)] + 1 == entries.size()) {
            pick[static_cast<std::size_t>(j)] = 0;
            --j;
        }
        if (j < 0) break;
        ++pick[static_cast<std::size_t>(j)];
    }
    return PartialFunction(f.arity() * k, f.input_alphabet(), 2, std::move(table));
}

PartialFunction total_or(int n) {
    if (n < 1) throw ParameterOutOfRange("OR needs arity >= 1");
    std::map<Word, Symbol> table;
    Word w(static_cast<std::size_t>(n), 0);
    for (;;) {
        Symbol out = 0;
        for (Symbol s : w) out |= s;
        table.emplace(w, out);
        int j = n - 1;
        while (j >= 0 && w[static_cast<std::size_t>(j)] == 1) w[static_cast<std::size_t>(j--)] = 0;
        if (j < 0) break;
        w[static_cast<std::size_t>(j)] = 1;
    }
    return PartialFunction(n, 2, 2, std::move(table));
}

namespace {

Word word_from_rank(std::uint64_t rank, int n, int g) {
    Word w(static_cast<std::size_t>(n), 0);
    for (int i = n - 1; i >= 0; --i) {
        w[static_cast<std::size_t>(i)] = static_cast<Symbol>(rank % static_cast<std::uint64_t>(g));
        rank /= static_cast<std::uint64_t>(g);
    }
    return w;
}

}  // namespace

PartialFunction random_partial(int n, int g, int h, const Rational& fraction,
                               std::uint64_t seed, std::uint64_t space_budget) {
    if (n < 1 || g < 2 || g > kMaxAlphabet || h < 2 || h > kMaxAlphabet)
        throw ParameterOutOfRange("random functions need n >= 1, 2 <= g,h <= 36");
    if (fraction <= 0 || fraction > 1)
        throw ParameterOutOfRange("domain fraction must lie in (0, 1]");
    std::uint64_t space = 1;
    for (int i = 0; i < n; ++i) {
        if (space > space_budget / static_cast<std::uint64_t>(g))
            throw BudgetExceeded("g^n exceeds the input-space budget");
        space *= static_cast<std::uint64_t>(g);
    }
    if (space < 2) throw ParameterOutOfRange("input space must contain at least 2 words");

    ratlp::BigInt sized = ratlp::round_half_up(fraction * Rational(space));
    std::uint64_t size = std::max<std::uint64_t>(2, sized.convert_to<std::uint64_t>());
    size = std::min(size, space);

    SplitMix64 rng(seed);
    // Partial Fisher-Yates over the word ranks: position j swaps with a
    // uniform pick from [j, space).
    std::vector<std::uint64_t> ranks(space);
    std::iota(ranks.begin(), ranks.end(), 0);
    for (std::uint64_t j = 0; j < size; ++j) {
        std::uint64_t pick = j + rng.below(space - j);
        std::swap(ranks[j], ranks[pick]);
    }

    std::vector<Word> domain;
    domain.reserve(size);
    for (std::uint64_t j = 0; j < size; ++j) domain.push_back(word_from_rank(ranks[j], n, g));
    std::sort(domain.begin(), domain.end());

    for (;;) {
        std::map<Word, Symbol> table;
        Symbol first = 0;
        bool mixed = false;
        for (std::uint64_t j = 0; j < size; ++j) {
            Symbol out = static_cast<Symbol>(rng.below(static_cast<std::uint64_t>(h)));
            if (j == 0)
                first = out;
            else if (out != first)
                mixed = true;
            table.emplace(domain[static_cast<std::size_t>(j)], out);
        }
        if (mixed) return PartialFunction(n, g, h, std::move(table));
    }
}

TotalFunctionStream::TotalFunctionStream(int n, int g, int h, std::uint64_t budget)
    : n_(n), g_(g), h_(h) {
    if (n < 1 || g < 1 || g > kMaxAlphabet || h < 2 || h > kMaxAlphabet)
        throw ParameterOutOfRange("total enumeration needs n >= 1, valid g, h >= 2");
    std::uint64_t space = 1;
    for (int i = 0; i < n; ++i) {
        if (space > budget / static_cast<std::uint64_t>(g))
            throw BudgetExceeded("g^n exceeds the enumeration budget");
        space *= static_cast<std::uint64_t>(g);
    }
    std::uint64_t tables = 1;
    for (std::uint64_t i = 0; i < space; ++i) {
        if (tables > budget / static_cast<std::uint64_t>(h))
            throw BudgetExceeded("h^(g^n) exceeds the enumeration budget");
        tables *= static_cast<std::uint64_t>(h);
    }
    count_ = tables - static_cast<std::uint64_t>(h);  // minus the constant tables

    words_.reserve(space);
    for (std::uint64_t r = 0; r < space; ++r) words_.push_back(word_from_rank(r, n, g));
    outputs_.assign(space, 0);
}

std::optional<PartialFunction> TotalFunctionStream::next() {
    auto advance = [&] {
        int j = static_cast<int>(outputs_.size()) - 1;
        while (j >= 0 && outputs_[static_cast<std::size_t>(j)] + 1 == h_)
            outputs_[static_cast<std::size_t>(j--)] = 0;
        if (j < 0) {
            exhausted_ = true;
            return;
        }
        ++outputs_[static_cast<std::size_t>(j)];
    };
    while (!exhausted_) {
        bool constant = std::all_of(outputs_.begin(), outputs_.end(),
                                    [&](Symbol s) { return s == outputs_[0]; });
        if (constant) {
            advance();
            continue;
        }
        std::map<Word, Symbol> table;
        for (std::size_t i = 0; i < words_.size(); ++i) table.emplace(words_[i], outputs_[i]);
        advance();
        return PartialFunction(n_, g_, h_, std::move(table));
    }
    return std::nullopt;
}

std::vector<CorpusEntry> random_corpus(int count, int max_n, int max_g, int max_h,
                                       std::uint64_t seed, std::optional<Rational> fraction) {
    if (count < 0 || max_n < 2 || max_g < 2 || max_h < 2)
        throw ParameterOutOfRange("corpus needs count >= 0 and caps >= 2");
    std::vector<CorpusEntry> out;
    out.reserve(static_cast<std::size_t>(count));
    for (int j = 0; j < count; ++j) {
        SplitMix64 params(seed ^ static_cast<std::uint64_t>(j));
        int n = 2 + static_cast<int>(params.below(static_cast<std::uint64_t>(max_n - 1)));
        int g = 2 + static_cast<int>(params.below(static_cast<std::uint64_t>(max_g - 1)));
        int h = 2 + static_cast<int>(params.below(static_cast<std::uint64_t>(max_h - 1)));
        Rational frac = fraction ? *fraction
                                 : Rational(1 + static_cast<long>(params.below(4)), 4);
        std::uint64_t fn_seed = params.next();
        CorpusEntry entry{
            "random(n=" + std::to_string(n) + ",g=" + std::to_string(g) + ",h=" +
                std::to_string(h) + ",fraction=" + ratlp::to_string(frac) + ",seed=" +
                std::to_string(fn_seed) + ")",
            random_partial(n, g, h, frac, fn_seed)};
        out.push_back(std::move(entry));
    }
    return out;
}

measures::RelationalWitness all_ones_relational(const PartialFunction& f) {
    measures::RelationalWitness witness;
    for (auto it = f.table().begin(); it != f.table().end(); ++it) {
        auto jt = it;
        for (++jt; jt != f.table().end(); ++jt)
            if (it->second != jt->second) witness.set(it->first, jt->first, Rational(1));
    }
    return witness;
}

measures::Rank1Witness uniform_rank1(const PartialFunction& f, int side_a) {
    if (f.output_alphabet() != 2)
        throw NonBooleanOutput("uniform rank-1 witness needs a Boolean output alphabet");
    if (side_a != 0 && side_a != 1) throw SymbolOutOfRange("side must be 0 or 1");
    measures::Rank1Witness witness;
    witness.outputs_a = {side_a};
    witness.outputs_b = {1 - side_a};
    for (const auto& [x, fx] : f.table())
        (fx == side_a ? witness.p : witness.q).emplace(x, Rational(1));
    return witness;
}

measures::DistanceScheme osp_distance_scheme(const PartialFunction& osp_fn) {
    measures::DistanceScheme scheme;
    for (auto it = osp_fn.table().begin(); it != osp_fn.table().end(); ++it) {
        auto jt = osp_fn.table().begin();
        for (; jt != osp_fn.table().end(); ++jt) {
            if (it->second == jt->second) continue;
            int d = osp_index(it->first) - osp_index(jt->first);
            if (d > 0) scheme.pairs[{it->first, jt->first}] = d;
        }
    }
    return scheme;
}

}  // namespace qbound::gen
