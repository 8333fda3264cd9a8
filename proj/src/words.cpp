#include "pingpong/words.hpp"

#include "pingpong/parallel.hpp"

#include <algorithm>
#include <cstdlib>
#include <sstream>

namespace pp {

long Syllable::mass() const {
    long m = 0;
    for (long e : exps) m += std::labs(e);
    return m;
}

long NormalWord::length() const {
    long m = 0;
    for (const auto& s : syllables) m += s.mass();
    return m;
}

bool NormalWord::operator<(const NormalWord& o) const {
    long a = length(), b = o.length();
    if (a != b) return a < b;
    return syllables < o.syllables;
}

NormalWord syllable_word(int factor, std::vector<long> exps) {
    NormalWord w;
    if (std::any_of(exps.begin(), exps.end(), [](long e) { return e != 0; }))
        w.syllables.push_back({factor, std::move(exps)});
    return w;
}

NormalWord generator_word(const Presentation& pres, const std::string& gen, long exp) {
    for (std::size_t f = 0; f < pres.size(); ++f)
        for (std::size_t i = 0; i < pres[f].generators.size(); ++i)
            if (pres[f].generators[i] == gen) {
                std::vector<long> e(pres[f].generators.size(), 0);
                e[i] = exp;
                return syllable_word(static_cast<int>(f), std::move(e));
            }
    throw std::invalid_argument("unknown generator '" + gen + "'");
}

NormalWord multiply(const NormalWord& u, const NormalWord& v) {
    NormalWord r = u;
    for (const Syllable& s : v.syllables) {
        if (!r.syllables.empty() && r.syllables.back().factor == s.factor) {
            Syllable& last = r.syllables.back();
            for (std::size_t i = 0; i < s.exps.size(); ++i) last.exps[i] += s.exps[i];
            if (std::all_of(last.exps.begin(), last.exps.end(), [](long e) { return e == 0; })) r.syllables.pop_back();
        } else {
            r.syllables.push_back(s);
        }
    }
    return r;
}

NormalWord invert(const NormalWord& w) {
    NormalWord r;
    for (auto it = w.syllables.rbegin(); it != w.syllables.rend(); ++it) {
        Syllable s = *it;
        for (long& e : s.exps) e = -e;
        r.syllables.push_back(std::move(s));
    }
    return r;
}

std::string to_string(const NormalWord& w, const Presentation& pres) {
    if (w.empty()) return "1";
    std::string out;
    for (const Syllable& s : w.syllables)
        for (std::size_t i = 0; i < s.exps.size(); ++i) {
            if (s.exps[i] == 0) continue;
            if (!out.empty()) out += " ";
            out += pres[s.factor].generators[i];
            if (s.exps[i] != 1) out += "^" + std::to_string(s.exps[i]);
        }
    return out;
}

NormalWord parse_word(const std::string& text, const Presentation& pres) {
    std::istringstream in(text);
    std::string tok;
    NormalWord w;
    while (in >> tok) {
        if (tok == "1") continue;
        auto caret = tok.find('^');
        long e = 1;
        std::string gen = tok.substr(0, caret);
        if (caret != std::string::npos) {
            std::size_t used = 0;
            std::string num = tok.substr(caret + 1);
            try {
                e = std::stol(num, &used);
            } catch (const std::exception&) {
                used = 0;
            }
            if (used == 0 || used != num.size()) throw std::invalid_argument("bad exponent in '" + tok + "'");
        }
        w = multiply(w, generator_word(pres, gen, e));
    }
    return w;
}

namespace {

// Nonzero integer vectors of the given rank with l1 norm exactly m, in lexicographic order.
std::vector<std::vector<long>> vectors_of_mass(int rank, long m) {
    std::vector<std::vector<long>> out;
    std::vector<long> cur(rank, 0);
    std::function<void(int, long)> rec = [&](int i, long left) {
        if (i == rank - 1) {
            if (left == 0) {
                out.push_back(cur);
            } else {
                cur[i] = -left;
                out.push_back(cur);
                cur[i] = left;
                out.push_back(cur);
            }
            cur[i] = 0;
            return;
        }
        for (long e = -left; e <= left; ++e) {
            cur[i] = e;
            rec(i + 1, left - std::labs(e));
        }
        cur[i] = 0;
    };
    if (m > 0) rec(0, m);
    return out;
}

} // namespace

std::vector<NormalWord> factor_ball(const Presentation& pres, int factor, int radius) {
    std::vector<NormalWord> out;
    for (long m = 1; m <= radius; ++m)
        for (auto& v : vectors_of_mass(pres[factor].rank(), m)) out.push_back(syllable_word(factor, v));
    return out;
}

std::vector<NormalWord> ball(const Presentation& pres, int radius) {
    if (radius < 1) throw std::invalid_argument("ball: radius must be >= 1");
    // by_mass[f][m] = syllables of factor f with mass m
    std::vector<std::vector<std::vector<std::vector<long>>>> by_mass(pres.size());
    for (std::size_t f = 0; f < pres.size(); ++f)
        for (long m = 0; m <= radius; ++m) by_mass[f].push_back(vectors_of_mass(pres[f].rank(), m));
    std::vector<NormalWord> out;
    NormalWord cur;
    std::function<void(int, long)> rec = [&](int prev, long left) {
        for (std::size_t f = 0; f < pres.size(); ++f) {
            if (static_cast<int>(f) == prev) continue;
            for (long m = 1; m <= left; ++m)
                for (const auto& v : by_mass[f][m]) {
                    cur.syllables.push_back({static_cast<int>(f), v});
                    out.push_back(cur);
                    rec(static_cast<int>(f), left - m);
                    cur.syllables.pop_back();
                }
        }
    };
    rec(-1, radius);
    std::sort(out.begin(), out.end());
    return out;
}

MoebiusMap evaluate(const NormalWord& w, const Presentation& pres, const Assignment& assignment) {
    auto lookup = [&](const std::string& g) -> const MoebiusMap& {
        auto it = assignment.find(g);
        if (it == assignment.end()) throw std::invalid_argument("evaluate: generator '" + g + "' is unassigned");
        return it->second;
    };
    std::vector<bool> checked(pres.size(), false);
    MoebiusMap r;
    for (const Syllable& s : w.syllables) {
        const FactorSpec& fs = pres[s.factor];
        if (!checked[s.factor]) {
            for (std::size_t i = 0; i < fs.generators.size(); ++i)
                for (std::size_t j = i + 1; j < fs.generators.size(); ++j)
                    if (!commutes(lookup(fs.generators[i]), lookup(fs.generators[j])))
                        throw FactorNotAbelian("generators " + fs.generators[i] + " and " + fs.generators[j] +
                                               " of factor " + fs.id + " do not commute");
            checked[s.factor] = true;
        }
        for (std::size_t i = 0; i < s.exps.size(); ++i)
            if (s.exps[i] != 0) r = r * power(lookup(fs.generators[i]), s.exps[i]);
    }
    return r;
}

HLCertificate certify_hyperbolic_like(const Presentation& pres, const Assignment& assignment, int radius) {
    // Surface FactorNotAbelian before any per-word work.
    for (std::size_t f = 0; f < pres.size(); ++f)
        evaluate(syllable_word(static_cast<int>(f), std::vector<long>(pres[f].rank(), 1)), pres, assignment);
    std::vector<NormalWord> words = ball(pres, radius);
    HLCertificate c;
    c.radius = radius;
    c.certified = true;
    // Chunks keep the first witness in ball order while stopping early on refusal.
    constexpr std::size_t kChunk = 256;
    std::vector<MapClass> cls(kChunk);
    for (std::size_t lo = 0; lo < words.size(); lo += kChunk) {
        std::size_t n = std::min(kChunk, words.size() - lo);
        parallel_for(n, [&](std::size_t i) { cls[i] = classify(evaluate(words[lo + i], pres, assignment)); });
        for (std::size_t i = 0; i < n; ++i) {
            ++c.words_checked;
            if (cls[i] != MapClass::Hyperbolic) {
                c.certified = false;
                c.witness = words[lo + i];
                c.witness_class = cls[i];
                return c;
            }
        }
    }
    return c;
}

} // namespace pp
