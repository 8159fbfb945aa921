#include "qbound/measures.hpp"

#include <algorithm>
#include <cstdint>
#include <numeric>

#include "qbound/errors.hpp"

namespace qbound::measures {

using ratlp::Direction;
using ratlp::LinearProgram;
using ratlp::LPOutcome;
using ratlp::LPStatus;
using ratlp::Relation;

namespace {

using Mask = std::vector<std::uint64_t>;

Mask make_mask(const std::vector<int>& indices, int n) {
    Mask m((static_cast<std::size_t>(n) + 63) / 64, 0);
    for (int i : indices) m[static_cast<std::size_t>(i) / 64] |= 1ULL << (i % 64);
    return m;
}

bool masks_intersect(const Mask& a, const Mask& b) {
    for (std::size_t w = 0; w < a.size(); ++w)
        if (a[w] & b[w]) return true;
    return false;
}

void mask_or(Mask& a, const Mask& b) {
    for (std::size_t w = 0; w < a.size(); ++w) a[w] |= b[w];
}

std::vector<std::vector<int>> block_index_sets(const PartialFunction& f, const Word& x) {
    auto family = sensitive_blocks(f, x);
    std::vector<std::vector<int>> out;
    out.reserve(family.blocks.size());
    for (auto& sb : family.blocks) out.push_back(sb.block.indices);
    return out;
}

LPOutcome solve_or_die(const LinearProgram& lp, const char* what) {
    LPOutcome out = ratlp::solve_lp(lp);
    if (!out.optimal()) throw Error(std::string("internal: ") + what + " program not optimal");
    return out;
}

}  // namespace

// ---- block sensitivity ----

int bs_at(const PartialFunction& f, const Word& x) {
    auto blocks = block_index_sets(f, x);
    std::sort(blocks.begin(), blocks.end(), [](const auto& a, const auto& b) {
        return a.size() != b.size() ? a.size() < b.size() : a < b;
    });
    std::vector<Mask> masks;
    masks.reserve(blocks.size());
    for (const auto& b : blocks) masks.push_back(make_mask(b, f.arity()));

    int best = 0;
    // Depth-first packing over size-sorted blocks with remaining-count pruning.
    auto dfs = [&](auto&& self, std::size_t start, const Mask& used, int count) -> void {
        best = std::max(best, count);
        if (count + static_cast<int>(masks.size() - start) <= best) return;
        for (std::size_t j = start; j < masks.size(); ++j) {
            if (masks_intersect(masks[j], used)) continue;
            Mask next = used;
            mask_or(next, masks[j]);
            self(self, j + 1, next, count + 1);
        }
    };
    dfs(dfs, 0, Mask(masks.empty() ? 1 : masks[0].size(), 0), 0);
    return best;
}

WordValue bs(const PartialFunction& f) {
    WordValue out{Rational(-1), {}};
    for (const auto& [x, fx] : f.table()) {
        Rational v(bs_at(f, x));
        if (v > out.value) out = {v, x};
    }
    return out;
}

// ---- certificate complexity ----

int cert_at(const PartialFunction& f, const Word& x) {
    auto blocks = block_index_sets(f, x);
    if (blocks.empty()) return 0;
    std::vector<Mask> masks;
    masks.reserve(blocks.size());
    for (const auto& b : blocks) masks.push_back(make_mask(b, f.arity()));

    std::vector<int> relevant;
    {
        Mask all = masks[0];
        for (std::size_t j = 1; j < masks.size(); ++j) mask_or(all, masks[j]);
        for (int i = 0; i < f.arity(); ++i)
            if (all[static_cast<std::size_t>(i) / 64] >> (i % 64) & 1) relevant.push_back(i);
    }

    auto hits_all = [&](const Mask& pick) {
        for (const auto& m : masks)
            if (!masks_intersect(m, pick)) return false;
        return true;
    };

    // Subset enumeration in increasing size with early exit.
    const int r = static_cast<int>(relevant.size());
    for (int size = 1; size <= r; ++size) {
        std::vector<int> comb(size);
        std::iota(comb.begin(), comb.end(), 0);
        for (;;) {
            std::vector<int> picked;
            picked.reserve(size);
            for (int c : comb) picked.push_back(relevant[c]);
            if (hits_all(make_mask(picked, f.arity()))) return size;
            int k = size - 1;
            while (k >= 0 && comb[k] == r - size + k) --k;
            if (k < 0) break;
            ++comb[k];
            for (int t = k + 1; t < size; ++t) comb[t] = comb[t - 1] + 1;
        }
    }
    return r;  // unreachable: the full relevant set always hits
}

WordValue cert(const PartialFunction& f) {
    WordValue out{Rational(-1), {}};
    for (const auto& [x, fx] : f.table()) {
        Rational v(cert_at(f, x));
        if (v > out.value) out = {v, x};
    }
    return out;
}

// ---- fractional block sensitivity / fractional certificates ----

namespace {

LinearProgram fbs_program(const std::vector<std::vector<int>>& blocks, int n) {
    LinearProgram lp(blocks.size(), Direction::Maximize);
    for (auto& c : lp.objective) c = 1;
    std::vector<std::vector<std::size_t>> per_index(static_cast<std::size_t>(n));
    for (std::size_t b = 0; b < blocks.size(); ++b)
        for (int i : blocks[b]) per_index[static_cast<std::size_t>(i)].push_back(b);
    for (int i = 0; i < n; ++i) {
        if (per_index[static_cast<std::size_t>(i)].empty()) continue;
        auto& row = lp.add_constraint(Relation::LessEq, Rational(1));
        for (std::size_t b : per_index[static_cast<std::size_t>(i)]) row.coeffs[b] = 1;
    }
    return lp;
}

}  // namespace

FbsAt fbs_at(const PartialFunction& f, const Word& x) {
    auto blocks = block_index_sets(f, x);
    if (blocks.empty()) return FbsAt{Rational(0), BlockWeighting{x, {}}};
    LinearProgram lp = fbs_program(blocks, f.arity());
    LPOutcome out = solve_or_die(lp, "fbs");
    FbsAt result;
    result.value = out.value;
    result.weighting.base = x;
    for (std::size_t b = 0; b < blocks.size(); ++b)
        result.weighting.weights.emplace_back(Block{blocks[b]}, out.assignment[b]);
    return result;
}

WordValue fbs(const PartialFunction& f) {
    WordValue out{Rational(-1), {}};
    for (const auto& [x, fx] : f.table()) {
        Rational v = fbs_at(f, x).value;
        if (v > out.value) out = {std::move(v), x};
    }
    return out;
}

Rational fbs_parametrized(const PartialFunction& f, const Word& x, const Rational& budget) {
    if (budget < 0 || budget > f.arity())
        throw ParameterOutOfRange("fbs budget must lie in [0, n]");
    auto blocks = block_index_sets(f, x);
    if (blocks.empty()) return Rational(0);
    LinearProgram lp = fbs_program(blocks, f.arity());
    auto& row = lp.add_constraint(Relation::LessEq, budget);
    for (std::size_t b = 0; b < blocks.size(); ++b)
        row.coeffs[b] = Rational(static_cast<long>(blocks[b].size()));
    return solve_or_die(lp, "parametrized fbs").value;
}

FcAt fc_at(const PartialFunction& f, const Word& x) {
    auto blocks = block_index_sets(f, x);
    std::vector<int> relevant;
    {
        std::vector<char> seen(static_cast<std::size_t>(f.arity()), 0);
        for (const auto& b : blocks)
            for (int i : b) seen[static_cast<std::size_t>(i)] = 1;
        for (int i = 0; i < f.arity(); ++i)
            if (seen[static_cast<std::size_t>(i)]) relevant.push_back(i);
    }
    std::vector<int> column(static_cast<std::size_t>(f.arity()), -1);
    for (std::size_t c = 0; c < relevant.size(); ++c)
        column[static_cast<std::size_t>(relevant[c])] = static_cast<int>(c);

    LinearProgram lp(std::max<std::size_t>(relevant.size(), 1), Direction::Minimize);
    for (std::size_t c = 0; c < relevant.size(); ++c) lp.objective[c] = 1;
    for (const auto& b : blocks) {
        auto& row = lp.add_constraint(Relation::GreaterEq, Rational(1));
        for (int i : b) row.coeffs[static_cast<std::size_t>(column[static_cast<std::size_t>(i)])] = 1;
    }
    LPOutcome out = solve_or_die(lp, "fc");

    FcAt result;
    result.value = out.value;
    result.weights.assign(static_cast<std::size_t>(f.arity()), Rational(0));
    for (std::size_t c = 0; c < relevant.size(); ++c)
        result.weights[static_cast<std::size_t>(relevant[c])] = out.assignment[c];
    return result;
}

FcResult fc(const PartialFunction& f) {
    FcResult result;
    result.value = -1;
    for (const auto& [x, fx] : f.table()) {
        FcAt at = fc_at(f, x);
        if (at.value > result.value) {
            result.value = at.value;
            result.argmax = x;
        }
        result.family.per_input.emplace(x, std::move(at.weights));
    }
    return result;
}

// ---- minimax over distributions ----

MmResult mm(const PartialFunction& f) {
    const int n = f.arity();
    std::vector<const Word*> words;
    std::vector<Symbol> values;
    for (const auto& [x, fx] : f.table()) {
        words.push_back(&x);
        values.push_back(fx);
    }
    const std::size_t s = words.size();

    struct Pair {
        std::size_t x, y;
        std::vector<int> diff;
        std::size_t var_base;  // first m variable
    };
    std::vector<Pair> pairs;
    for (std::size_t i = 0; i < s; ++i)
        for (std::size_t j = i + 1; j < s; ++j)
            if (values[i] != values[j])
                pairs.push_back({i, j, diff_positions(*words[i], *words[j]), 0});

    const std::size_t v_vars = s * static_cast<std::size_t>(n);
    const std::size_t t_var = v_vars;
    std::size_t total = v_vars + 1;
    for (auto& p : pairs) {
        p.var_base = total;
        total += p.diff.size();
    }

    LinearProgram lp(total, Direction::Minimize);
    lp.objective[t_var] = 1;
    for (std::size_t i = 0; i < s; ++i) {
        auto& row = lp.add_constraint(Relation::LessEq, Rational(0));
        for (int k = 0; k < n; ++k) row.coeffs[i * static_cast<std::size_t>(n) + k] = 1;
        row.coeffs[t_var] = -1;
    }
    for (const auto& p : pairs) {
        auto& cover = lp.add_constraint(Relation::GreaterEq, Rational(1));
        for (std::size_t d = 0; d < p.diff.size(); ++d) cover.coeffs[p.var_base + d] = 1;
        for (std::size_t d = 0; d < p.diff.size(); ++d) {
            const std::size_t m_var = p.var_base + d;
            const std::size_t i = static_cast<std::size_t>(p.diff[d]);
            auto& rx = lp.add_constraint(Relation::LessEq, Rational(0));
            rx.coeffs[m_var] = 1;
            rx.coeffs[p.x * static_cast<std::size_t>(n) + i] = -1;
            auto& ry = lp.add_constraint(Relation::LessEq, Rational(0));
            ry.coeffs[m_var] = 1;
            ry.coeffs[p.y * static_cast<std::size_t>(n) + i] = -1;
        }
    }

    LPOutcome out = solve_or_die(lp, "mm");
    MmResult result;
    result.value = out.value;
    for (std::size_t i = 0; i < s; ++i) {
        std::vector<Rational> v(out.assignment.begin() + static_cast<std::ptrdiff_t>(i * n),
                                out.assignment.begin() + static_cast<std::ptrdiff_t>((i + 1) * n));
        Rational sum = std::accumulate(v.begin(), v.end(), Rational(0));
        std::vector<Rational> p(v);
        if (sum != 0)
            for (auto& e : p) e /= sum;
        result.weights.per_input.emplace(*words[i], std::move(v));
        result.distributions.per_input.emplace(*words[i], std::move(p));
    }
    return result;
}

// ---- rank-1 relational adversary ----

Ca1Result ca1(const PartialFunction& f) {
    if (f.input_alphabet() != 2)
        throw NonBooleanAlphabet("exact ca1 is implemented for Boolean input alphabets only");
    const int n = f.arity();

    std::vector<const Word*> words;
    std::vector<Symbol> values;
    for (const auto& [x, fx] : f.table()) {
        words.push_back(&x);
        values.push_back(fx);
    }
    const std::size_t s = words.size();

    std::vector<int> achieved;
    {
        std::vector<char> seen(static_cast<std::size_t>(f.output_alphabet()), 0);
        for (Symbol v : values) seen[v] = 1;
        for (int b = 0; b < f.output_alphabet(); ++b)
            if (seen[static_cast<std::size_t>(b)]) achieved.push_back(b);
    }

    Ca1Result best;
    best.value = -1;
    // Unordered partitions of the achieved outputs; the first achieved output
    // stays on the A side. Unachieved outputs are irrelevant to the program
    // and reported on the B side.
    const std::size_t splits = 1ULL << (achieved.size() - 1);
    for (std::size_t split = 0; split < splits; ++split) {
        std::vector<char> in_a(static_cast<std::size_t>(f.output_alphabet()), 0);
        in_a[static_cast<std::size_t>(achieved[0])] = 1;
        for (std::size_t k = 1; k < achieved.size(); ++k)
            if (!(split >> (k - 1) & 1)) in_a[static_cast<std::size_t>(achieved[k])] = 1;

        std::vector<char> is_x(s);
        std::size_t x_count = 0;
        for (std::size_t i = 0; i < s; ++i) {
            is_x[i] = in_a[values[i]];
            x_count += is_x[i] != 0;
        }
        if (x_count == 0 || x_count == s) continue;

        ratlp::DisjunctiveProgram dp;
        dp.base = LinearProgram(s, Direction::Maximize);
        for (std::size_t i = 0; i < s; ++i)
            if (is_x[i]) dp.base.objective[i] = 1;
        auto& balance = dp.base.add_constraint(Relation::Equal, Rational(0));
        for (std::size_t i = 0; i < s; ++i) balance.coeffs[i] = is_x[i] ? 1 : -1;

        for (int i = 0; i < n; ++i) {
            for (int b = 0; b < 2; ++b) {
                ratlp::Constraint on_x{std::vector<Rational>(s), Relation::LessEq, Rational(1)};
                ratlp::Constraint on_y{std::vector<Rational>(s), Relation::LessEq, Rational(1)};
                for (std::size_t w = 0; w < s; ++w) {
                    const int sym = (*words[w])[static_cast<std::size_t>(i)];
                    if (is_x[w] && sym == b) on_x.coeffs[w] = 1;
                    if (!is_x[w] && sym != b) on_y.coeffs[w] = 1;
                }
                dp.disjunctions.push_back({std::move(on_x), std::move(on_y)});
            }
        }

        LPOutcome out = ratlp::solve_disjunctive(dp);
        if (!out.optimal()) throw Error("internal: ca1 program not optimal");
        if (out.value > best.value) {
            best.value = out.value;
            best.witness = Rank1Witness{};
            for (int b = 0; b < f.output_alphabet(); ++b)
                (in_a[static_cast<std::size_t>(b)] ? best.witness.outputs_a
                                                   : best.witness.outputs_b)
                    .push_back(b);
            for (std::size_t w = 0; w < s; ++w) {
                if (out.assignment[w] == 0) continue;
                (is_x[w] ? best.witness.p : best.witness.q).emplace(*words[w], out.assignment[w]);
            }
        }
    }
    return best;
}

// ---- one-sided measures ----

WordValue one_sided(const PartialFunction& f, MeasureKind kind, int side) {
    if (f.output_alphabet() != 2)
        throw NonBooleanOutput("one-sided measures require a Boolean output alphabet");
    if (side != 0 && side != 1) throw SymbolOutOfRange("side must be 0 or 1");
    WordValue out{Rational(-1), {}};
    for (const auto& [x, fx] : f.table()) {
        if (fx != side) continue;
        Rational v;
        switch (kind) {
            case MeasureKind::Bs: v = bs_at(f, x); break;
            case MeasureKind::Cert: v = cert_at(f, x); break;
            case MeasureKind::Fbs: v = fbs_at(f, x).value; break;
            case MeasureKind::Fc: v = fc_at(f, x).value; break;
        }
        if (v > out.value) out = {std::move(v), x};
    }
    return out;
}

// ---- witness containers ----

namespace {

std::pair<Word, Word> ordered_key(const Word& x, const Word& y) {
    return x <= y ? std::make_pair(x, y) : std::make_pair(y, x);
}

}  // namespace

void RelationalWitness::set(const Word& x, const Word& y, Rational r) {
    pairs[ordered_key(x, y)] = std::move(r);
}

Rational RelationalWitness::get(const Word& x, const Word& y) const {
    auto it = pairs.find(ordered_key(x, y));
    return it == pairs.end() ? Rational(0) : it->second;
}

void WeightScheme::set_pair(const Word& x, const Word& y, Rational w) {
    pairs[ordered_key(x, y)] = std::move(w);
}

void WeightScheme::set_triple(const Word& x, const Word& y, int i, Rational w) {
    triples[{x, y, i}] = std::move(w);
}

// ---- witness evaluation ----

Rational eval_relational(const PartialFunction& f, const RelationalWitness& witness) {
    std::map<Word, Rational> row_sum;
    std::map<Word, std::map<int, Rational>> denom;  // per (x, i): sum over differing partners
    std::vector<std::pair<const Word*, const Word*>> support;

    for (const auto& [key, r] : witness.pairs) {
        const auto& [x, y] = key;
        if (r < 0) throw InvalidWitness("relational weight must be nonnegative");
        if (r == 0) continue;
        if (!f.contains(x) || !f.contains(y))
            throw InvalidWitness("relational witness references a word outside the domain");
        if (f.value_at(x) == f.value_at(y))
            throw InvalidWitness("nonzero relational weight on a pair with equal outputs");
        support.emplace_back(&x, &y);
        row_sum[x] += r;
        row_sum[y] += r;
        for (int i : diff_positions(x, y)) {
            denom[x][i] += r;
            denom[y][i] += r;
        }
    }
    if (support.empty()) throw EmptyWitness("relational witness has no positive weight");

    bool have = false;
    Rational best;
    for (const auto& [px, py] : support) {
        const Word& x = *px;
        const Word& y = *py;
        for (int i : diff_positions(x, y)) {
            // Denominators are positive here: the pair itself contributes.
            Rational theta_x = row_sum[x] / denom[x][i];
            Rational theta_y = row_sum[y] / denom[y][i];
            Rational m = std::max(theta_x, theta_y);
            if (!have || m < best) {
                best = std::move(m);
                have = true;
            }
        }
    }
    return best;
}

Rational eval_weighted(const PartialFunction& f, const WeightScheme& scheme) {
    for (const auto& [key, w] : scheme.pairs) {
        if (w < 0) throw InvalidWitness("pair weight must be nonnegative");
        if (w == 0) continue;
        const auto& [x, y] = key;
        if (!f.contains(x) || !f.contains(y))
            throw InvalidWitness("weight scheme references a word outside the domain");
        if (f.value_at(x) == f.value_at(y))
            throw InvalidWitness("nonzero pair weight on a pair with equal outputs");
    }
    std::map<Word, Rational> wt;
    std::map<Word, std::map<int, Rational>> v;
    for (const auto& [key, w] : scheme.triples) {
        const auto& [x, y, i] = key;
        if (w < 0) throw InvalidWitness("triple weight must be nonnegative");
        if (w == 0) continue;
        if (!f.contains(x) || !f.contains(y))
            throw InvalidWitness("weight scheme references a word outside the domain");
        if (i < 0 || i >= f.arity()) throw InvalidWitness("triple index out of range");
        if (x[static_cast<std::size_t>(i)] == y[static_cast<std::size_t>(i)])
            throw InvalidWitness("nonzero triple weight on an agreeing position");
        if (f.value_at(x) == f.value_at(y))
            throw InvalidWitness("nonzero triple weight on a pair with equal outputs");
        v[x][i] += w;
    }

    auto triple_value = [&](const Word& x, const Word& y, int i) {
        auto it = scheme.triples.find({x, y, i});
        return it == scheme.triples.end() ? Rational(0) : it->second;
    };

    std::vector<std::pair<const Word*, const Word*>> support;
    for (const auto& [key, w] : scheme.pairs) {
        if (w == 0) continue;
        const auto& [x, y] = key;
        wt[x] += w;
        wt[y] += w;
        for (int i : diff_positions(x, y)) {
            if (triple_value(x, y, i) < w || triple_value(y, x, i) < w)
                throw InvalidWitness("triple weights must dominate the pair weight on differing positions");
        }
        support.emplace_back(&x, &y);
    }
    if (support.empty()) throw EmptyWitness("weight scheme has no positive pair weight");

    bool have = false;
    Rational best;
    for (const auto& [px, py] : support) {
        const Word& x = *px;
        const Word& y = *py;
        for (int i : diff_positions(x, y)) {
            Rational rx = wt[x] / v[x][i];
            Rational ry = wt[y] / v[y][i];
            Rational m = std::max(rx, ry);
            if (!have || m < best) {
                best = std::move(m);
                have = true;
            }
        }
    }
    return best;
}

MmEval eval_mm_witness(const PartialFunction& f, const DistributionFamily& family) {
    for (const auto& [x, fx] : f.table())
        if (!family.per_input.count(x))
            throw IncompleteFamily("distribution family misses domain word '" + word_to_string(x) + "'");
    for (const auto& [x, p] : family.per_input) {
        if (!f.contains(x))
            throw IncompleteFamily("distribution family mentions a word outside the domain");
        if (p.size() != static_cast<std::size_t>(f.arity()))
            throw NotADistribution("distribution vector has wrong length");
        Rational sum = 0;
        for (const auto& e : p) {
            if (e < 0) throw NotADistribution("distribution entries must be nonnegative");
            sum += e;
        }
        if (sum != 1) throw NotADistribution("distribution entries must sum to 1");
    }

    MmEval result;
    result.value = 0;
    bool have = false;
    for (auto it = f.table().begin(); it != f.table().end(); ++it) {
        auto jt = it;
        for (++jt; jt != f.table().end(); ++jt) {
            if (it->second == jt->second) continue;
            const auto& px = family.per_input.at(it->first);
            const auto& py = family.per_input.at(jt->first);
            Rational overlap = 0;
            for (int i : diff_positions(it->first, jt->first))
                overlap += std::min(px[static_cast<std::size_t>(i)], py[static_cast<std::size_t>(i)]);
            if (overlap == 0) {
                result.infinite = true;
                return result;
            }
            Rational v = Rational(1) / overlap;
            if (!have || v > result.value) {
                result.value = std::move(v);
                have = true;
            }
        }
    }
    return result;
}

Rational eval_rank1(const PartialFunction& f, const Rank1Witness& witness) {
    const int h = f.output_alphabet();
    std::vector<int> seen(static_cast<std::size_t>(h), 0);
    for (int b : witness.outputs_a) {
        if (b < 0 || b >= h) throw InvalidPartition("partition names an output symbol >= h");
        if (seen[static_cast<std::size_t>(b)]++) throw InvalidPartition("output repeated in partition");
    }
    for (int b : witness.outputs_b) {
        if (b < 0 || b >= h) throw InvalidPartition("partition names an output symbol >= h");
        if (seen[static_cast<std::size_t>(b)]++) throw InvalidPartition("output repeated in partition");
    }
    for (int b = 0; b < h; ++b)
        if (!seen[static_cast<std::size_t>(b)]) throw InvalidPartition("partition does not cover the output alphabet");
    if (witness.outputs_a.empty() || witness.outputs_b.empty())
        throw InvalidPartition("both partition classes must be non-empty");

    std::vector<char> in_a(static_cast<std::size_t>(h), 0);
    for (int b : witness.outputs_a) in_a[static_cast<std::size_t>(b)] = 1;

    auto normalize = [&](const std::map<Word, Rational>& side, bool a_side) {
        Rational total = 0;
        std::vector<std::pair<const Word*, Rational>> out;
        for (const auto& [x, w] : side) {
            if (w < 0) throw NotADistribution("rank-1 weights must be nonnegative");
            if (w == 0) continue;
            if (!f.contains(x))
                throw InvalidPartition("rank-1 support references a word outside the domain");
            if (static_cast<bool>(in_a[f.value_at(x)]) != a_side)
                throw InvalidPartition("rank-1 support leaks across the output partition");
            out.emplace_back(&x, w);
            total += w;
        }
        if (out.empty()) throw NotADistribution("rank-1 side has empty support");
        for (auto& [w_ptr, w] : out) w /= total;
        return out;
    };
    auto p = normalize(witness.p, true);
    auto q = normalize(witness.q, false);

    const int n = f.arity();
    bool have = false;
    Rational best_min;  // largest min{...}; the bound is its reciprocal

    if (f.input_alphabet() == 2) {
        // Boolean simplification: minimize over (i, b) without support guards.
        for (int i = 0; i < n; ++i) {
            for (int b = 0; b < 2; ++b) {
                Rational pr_x = 0;  // Pr_p[x_i = b]
                for (const auto& [x, w] : p)
                    if ((*x)[static_cast<std::size_t>(i)] == b) pr_x += w;
                Rational pr_y = 0;  // Pr_q[y_i != b]
                for (const auto& [y, w] : q)
                    if ((*y)[static_cast<std::size_t>(i)] != b) pr_y += w;
                Rational m = std::min(pr_x, pr_y);
                if (!have || m > best_min) {
                    best_min = std::move(m);
                    have = true;
                }
            }
        }
    } else {
        const int g = f.input_alphabet();
        for (int i = 0; i < n; ++i) {
            std::vector<Rational> mass_p(static_cast<std::size_t>(g), Rational(0));
            std::vector<Rational> mass_q(static_cast<std::size_t>(g), Rational(0));
            for (const auto& [x, w] : p) mass_p[(*x)[static_cast<std::size_t>(i)]] += w;
            for (const auto& [y, w] : q) mass_q[(*y)[static_cast<std::size_t>(i)]] += w;
            for (int g1 = 0; g1 < g; ++g1) {
                if (mass_p[static_cast<std::size_t>(g1)] == 0) continue;  // no x with x_i = g1
                for (int g2 = 0; g2 < g; ++g2) {
                    if (g2 == g1 || mass_q[static_cast<std::size_t>(g2)] == 0) continue;
                    Rational pr_y = 1 - mass_q[static_cast<std::size_t>(g1)];  // Pr_q[y_i != g1]
                    Rational pr_x = 1 - mass_p[static_cast<std::size_t>(g2)];  // Pr_p[x_i != g2]
                    Rational m = std::min(pr_x, pr_y);
                    if (!have || m > best_min) {
                        best_min = std::move(m);
                        have = true;
                    }
                }
            }
        }
        if (!have) throw InvalidPartition("rank-1 witness constrains no position");
    }
    // best_min > 0: some position separates the supports.
    return Rational(1) / best_min;
}

DistanceEval eval_distance_scheme(const PartialFunction& f, const DistanceScheme& scheme) {
    if (scheme.pairs.empty()) throw EmptyWitness("distance scheme is empty");
    for (const auto& [key, d] : scheme.pairs) {
        const auto& [x, y] = key;
        if (d <= 0) throw InvalidWitness("distances must be positive integers");
        if (!f.contains(x) || !f.contains(y))
            throw InvalidWitness("distance scheme references a word outside the domain");
        if (f.value_at(x) == f.value_at(y))
            throw InvalidWitness("distance assigned to a pair with equal outputs");
    }

    DistanceEval result;
    result.total_weight = 0;
    for (const auto& [key, d] : scheme.pairs)
        result.total_weight += Rational(1) / Rational(d);

    // Load = max over d of the number of partners at distance d differing at i.
    std::map<std::pair<Word, int>, std::map<long long, long long>> right_counts, left_counts;
    for (const auto& [key, d] : scheme.pairs) {
        const auto& [x, y] = key;
        for (int i : diff_positions(x, y)) {
            ++right_counts[{x, i}][d];
            ++left_counts[{y, i}][d];
        }
    }
    auto load = [](const std::map<long long, long long>& counts) {
        long long best = 0;
        for (const auto& [d, c] : counts) best = std::max(best, c);
        return best;
    };

    bool have = false;
    Rational best;
    for (const auto& [key, d] : scheme.pairs) {
        const auto& [x, y] = key;
        for (int i : diff_positions(x, y)) {
            Rational rl(load(right_counts[{x, i}]));
            Rational ll(load(left_counts[{y, i}]));
            Rational m = std::max(Rational(1) / rl, Rational(1) / ll);
            if (!have || m < best) {
                best = std::move(m);
                have = true;
            }
        }
    }
    result.bound = result.total_weight / Rational(static_cast<long>(f.domain_size())) * best;
    return result;
}

}  // namespace qbound::measures
