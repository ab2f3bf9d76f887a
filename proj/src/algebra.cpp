#include "rigidity/algebra.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

namespace rigidity {

// ---------------------------------------------------------------------------
// prime field

namespace {

std::uint64_t mulmod64(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
    return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % m);
}

std::uint64_t powmod64(std::uint64_t a, std::uint64_t e, std::uint64_t m) {
    std::uint64_t r = 1 % m;
    a %= m;
    while (e) {
        if (e & 1) r = mulmod64(r, a, m);
        a = mulmod64(a, a, m);
        e >>= 1;
    }
    return r;
}

}  // namespace

bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        if (n == p) return true;
        if (n % p == 0) return false;
    }
    std::uint64_t d = n - 1;
    int r = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++r;
    }
    // deterministic Miller-Rabin witness set for 64-bit integers
    for (std::uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        std::uint64_t x = powmod64(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool composite = true;
        for (int i = 0; i < r - 1; ++i) {
            x = mulmod64(x, x, n);
            if (x == n - 1) {
                composite = false;
                break;
            }
        }
        if (composite) return false;
    }
    return true;
}

std::uint32_t previous_prime(std::uint32_t n) {
    for (std::uint32_t c = n; c-- > 2;)
        if (is_prime(c)) return c;
    throw std::invalid_argument("no prime below " + std::to_string(n));
}

PrimeField::PrimeField(std::uint32_t prime) : p(prime) {
    if (p >= (1u << 31)) throw std::invalid_argument("prime must be below 2^31");
    if (!is_prime(p)) throw std::invalid_argument(std::to_string(p) + " is not prime");
}

std::uint32_t PrimeField::pow(std::uint32_t a, std::uint64_t e) const {
    return static_cast<std::uint32_t>(powmod64(a, e, p));
}

std::uint32_t PrimeField::inv(std::uint32_t a) const {
    if (a == 0) throw std::invalid_argument("division by zero");
    return pow(a, p - 2);
}

std::uint32_t PrimeField::reduce(std::int64_t a) const {
    std::int64_t r = a % static_cast<std::int64_t>(p);
    if (r < 0) r += p;
    return static_cast<std::uint32_t>(r);
}

// ---------------------------------------------------------------------------
// monomials

void Monomial::set_exponent(int var, int value) {
    if (var < 0 || var >= max_vars) throw std::invalid_argument("variable index out of range");
    if (value < 0 || value > max_exponent) throw std::invalid_argument("exponent out of range");
    const int old = exponent(var);
    w_[var >> 2] &= ~(0xffffull << ((var & 3) * 16));
    w_[var >> 2] |= static_cast<std::uint64_t>(value) << ((var & 3) * 16);
    deg_ += static_cast<std::uint32_t>(value - old);
}

Monomial Monomial::product(const Monomial& a, const Monomial& b) {
    constexpr std::uint64_t H = 0x8000800080008000ull;
    Monomial r;
    for (int i = 0; i < words; ++i) {
        if ((a.w_[i] | b.w_[i]) & H) throw std::overflow_error("monomial exponent overflow");
        r.w_[i] = a.w_[i] + b.w_[i];
    }
    r.deg_ = a.deg_ + b.deg_;
    return r;
}

Monomial Monomial::quotient(const Monomial& a, const Monomial& b) {
    Monomial r;
    for (int i = 0; i < words; ++i) r.w_[i] = a.w_[i] - b.w_[i];
    r.deg_ = a.deg_ - b.deg_;
    return r;
}

Monomial Monomial::lcm(const Monomial& a, const Monomial& b) {
    Monomial r;
    std::uint32_t deg = 0;
    for (int v = 0; v < max_vars; ++v) {
        int e = std::max(a.exponent(v), b.exponent(v));
        if (e) {
            r.w_[v >> 2] |= static_cast<std::uint64_t>(e) << ((v & 3) * 16);
            deg += static_cast<std::uint32_t>(e);
        }
    }
    r.deg_ = deg;
    return r;
}

int Monomial::compare(const Monomial& b) const {
    if (deg_ != b.deg_) return deg_ < b.deg_ ? -1 : 1;
    // degrevlex tie-break: at the highest differing variable, the smaller
    // exponent wins
    for (int i = words - 1; i >= 0; --i) {
        std::uint64_t d = w_[i] ^ b.w_[i];
        if (!d) continue;
        int lane = (63 - __builtin_clzll(d)) >> 4;
        std::uint64_t ea = (w_[i] >> (lane * 16)) & 0xffff;
        std::uint64_t eb = (b.w_[i] >> (lane * 16)) & 0xffff;
        return ea > eb ? -1 : 1;
    }
    return 0;
}

std::uint64_t Monomial::divmask() const {
    std::uint64_t mask = 0;
    for (int v = 0; v < max_vars; ++v) {
        int e = exponent(v);
        if (e >= 1) mask |= 1ull << (2 * v);
        if (e >= 3) mask |= 1ull << (2 * v + 1);
    }
    return mask;
}

// ---------------------------------------------------------------------------
// polynomials

Polynomial::Polynomial(std::vector<Term> terms, const PrimeField& field) {
    for (auto& t : terms) t.coeff %= field.p;
    std::sort(terms.begin(), terms.end(),
              [](const Term& a, const Term& b) { return a.mon.compare(b.mon) > 0; });
    for (auto& t : terms) {
        if (!terms_.empty() && terms_.back().mon == t.mon) {
            terms_.back().coeff = field.add(terms_.back().coeff, t.coeff);
            if (terms_.back().coeff == 0) terms_.pop_back();
        } else if (t.coeff != 0) {
            terms_.push_back(t);
        }
    }
}

Polynomial Polynomial::unchecked(std::vector<Term> sorted_terms) {
    Polynomial p;
    p.terms_ = std::move(sorted_terms);
    return p;
}

// ---------------------------------------------------------------------------
// geobucket accumulator

namespace {

// Term vectors inside buckets are kept in ASCENDING order so the leading term
// sits at the back and pops in O(1).
class Geobucket {
public:
    explicit Geobucket(const PrimeField& field) : f_(field) {}

    // src is descending (polynomial order); scaled by c and shifted by m
    void add_scaled(const std::vector<Term>& src, size_t skip_leading, const Monomial& m,
                    std::uint32_t c) {
        scratch_.clear();
        scratch_.reserve(src.size() - skip_leading);
        for (size_t i = src.size(); i-- > skip_leading;) {
            std::uint32_t coeff = f_.mul(src[i].coeff, c);
            if (coeff) scratch_.push_back({Monomial::product(src[i].mon, m), coeff});
        }
        add_ascending(scratch_);
    }

    void add_plain(const std::vector<Term>& src) {
        scratch_.assign(src.rbegin(), src.rend());
        add_ascending(scratch_);
    }

    bool pop_leading(Term& out) {
        while (true) {
            int best = -1;
            for (size_t i = 0; i < buckets_.size(); ++i) {
                if (buckets_[i].empty()) continue;
                if (best < 0 || buckets_[i].back().mon.compare(buckets_[best].back().mon) > 0)
                    best = static_cast<int>(i);
            }
            if (best < 0) return false;
            Monomial m = buckets_[best].back().mon;
            std::uint32_t c = 0;
            for (auto& bucket : buckets_)
                while (!bucket.empty() && bucket.back().mon == m) {
                    c = f_.add(c, bucket.back().coeff);
                    bucket.pop_back();
                }
            if (c != 0) {
                out = {m, c};
                return true;
            }
        }
    }

private:
    static size_t capacity(size_t i) { return 16ull << (2 * i); }

    void add_ascending(std::vector<Term>& terms) {
        if (terms.empty()) return;
        size_t i = 0;
        while (capacity(i) < terms.size()) ++i;
        while (true) {
            if (i >= buckets_.size()) {
                buckets_.resize(i + 1);
                buckets_[i] = std::move(terms);
                return;
            }
            if (buckets_[i].empty()) {
                buckets_[i] = std::move(terms);
                return;
            }
            merge_into(buckets_[i], terms);
            if (terms.size() <= capacity(i)) {
                buckets_[i] = std::move(terms);
                return;
            }
            buckets_[i].clear();
            ++i;
        }
    }

    // terms := merge(a, terms), both ascending
    void merge_into(std::vector<Term>& a, std::vector<Term>& terms) {
        merged_.clear();
        merged_.reserve(a.size() + terms.size());
        size_t i = 0, j = 0;
        while (i < a.size() && j < terms.size()) {
            int cmp = a[i].mon.compare(terms[j].mon);
            if (cmp < 0) {
                merged_.push_back(a[i++]);
            } else if (cmp > 0) {
                merged_.push_back(terms[j++]);
            } else {
                std::uint32_t c = f_.add(a[i].coeff, terms[j].coeff);
                if (c) merged_.push_back({a[i].mon, c});
                ++i;
                ++j;
            }
        }
        merged_.insert(merged_.end(), a.begin() + i, a.end());
        merged_.insert(merged_.end(), terms.begin() + j, terms.end());
        terms.swap(merged_);
    }

    const PrimeField& f_;
    std::vector<std::vector<Term>> buckets_;
    std::vector<Term> scratch_;
    std::vector<Term> merged_;
};

struct BasisEntry {
    Polynomial poly;  // monic
    std::uint64_t divmask;
};

// Full normal form of the polynomial currently inside the bucket.
Polynomial reduce_bucket(Geobucket& bucket, const std::vector<BasisEntry>& basis,
                         const std::vector<int>& order, const PrimeField& field) {
    std::vector<Term> out;
    Term lead;
    while (bucket.pop_leading(lead)) {
        const std::uint64_t mask = lead.mon.divmask();
        const BasisEntry* reducer = nullptr;
        for (int idx : order) {
            const BasisEntry& e = basis[idx];
            if ((e.divmask & ~mask) == 0 && e.poly.leading().mon.divides(lead.mon)) {
                reducer = &e;
                break;
            }
        }
        if (!reducer) {
            out.push_back(lead);
            continue;
        }
        Monomial q = Monomial::quotient(lead.mon, reducer->poly.leading().mon);
        bucket.add_scaled(reducer->poly.terms(), 1, q, field.neg(lead.coeff));
    }
    return Polynomial::unchecked(std::move(out));
}

Polynomial make_monic(Polynomial p, const PrimeField& field) {
    if (p.is_zero() || p.leading().coeff == 1) return p;
    std::uint32_t s = field.inv(p.leading().coeff);
    std::vector<Term> terms = p.terms();
    for (auto& t : terms) t.coeff = field.mul(t.coeff, s);
    return Polynomial::unchecked(std::move(terms));
}

struct PairKey {
    Monomial lcm;
    int i, j;

    bool operator<(const PairKey& o) const {
        int c = lcm.compare(o.lcm);
        if (c != 0) return c < 0;
        if (j != o.j) return j < o.j;
        return i < o.i;
    }
};

struct GroebnerState {
    const PrimeField& field;
    std::vector<BasisEntry> basis;
    std::vector<int> reducer_order;  // basis indices sorted by ascending LM
    std::set<PairKey> pairs;

    explicit GroebnerState(const PrimeField& f) : field(f) {}

    const Monomial& lm(int i) const { return basis[i].poly.leading().mon; }

    void insert_reducer(int idx) {
        auto it = std::lower_bound(reducer_order.begin(), reducer_order.end(), idx,
                                   [&](int a, int b) { return lm(a).compare(lm(b)) < 0; });
        reducer_order.insert(it, idx);
    }

    // Gebauer-Moeller update: add h to the basis, maintaining the pair set.
    void update(Polynomial h) {
        const int t = static_cast<int>(basis.size());
        const Monomial lmh = h.leading().mon;

        struct Cand {
            Monomial lcm;
            int i;
            bool coprime;
        };
        std::vector<Cand> cands, kept;
        cands.reserve(basis.size());
        for (int i = 0; i < t; ++i)
            cands.push_back({Monomial::lcm(lm(i), lmh), i, lm(i).coprime(lmh)});

        for (size_t x = 0; x < cands.size(); ++x) {
            bool keep = cands[x].coprime;
            if (!keep) {
                keep = true;
                for (size_t y = x + 1; keep && y < cands.size(); ++y)
                    if (cands[y].lcm.divides(cands[x].lcm)) keep = false;
                for (const auto& d : kept)
                    if (!keep) break;
                    else if (d.lcm.divides(cands[x].lcm)) keep = false;
            }
            if (keep) kept.push_back(cands[x]);
        }

        // drop old pairs superseded by h
        for (auto it = pairs.begin(); it != pairs.end();) {
            if (lmh.divides(it->lcm) &&
                Monomial::lcm(lm(it->i), lmh) != it->lcm &&
                Monomial::lcm(lm(it->j), lmh) != it->lcm)
                it = pairs.erase(it);
            else
                ++it;
        }
        for (const auto& d : kept)
            if (!d.coprime) pairs.insert({d.lcm, d.i, t});

        basis.push_back({std::move(h), lmh.divmask()});
        insert_reducer(t);
    }
};

}  // namespace

std::vector<Polynomial> groebner_basis(const std::vector<Polynomial>& generators,
                                       const PrimeField& field) {
    GroebnerState st(field);
    for (const Polynomial& g : generators) {
        if (g.is_zero()) continue;
        // interreduce incoming generators as they arrive
        Geobucket bucket(field);
        bucket.add_plain(g.terms());
        Polynomial r = reduce_bucket(bucket, st.basis, st.reducer_order, field);
        if (!r.is_zero()) st.update(make_monic(std::move(r), field));
    }

    while (!st.pairs.empty()) {
        PairKey pk = *st.pairs.begin();
        st.pairs.erase(st.pairs.begin());
        const Polynomial& fi = st.basis[pk.i].poly;
        const Polynomial& fj = st.basis[pk.j].poly;
        Geobucket bucket(field);
        bucket.add_scaled(fi.terms(), 1, Monomial::quotient(pk.lcm, fi.leading().mon), 1);
        bucket.add_scaled(fj.terms(), 1, Monomial::quotient(pk.lcm, fj.leading().mon),
                          field.p - 1);
        Polynomial r = reduce_bucket(bucket, st.basis, st.reducer_order, field);
        if (!r.is_zero()) st.update(make_monic(std::move(r), field));
    }

    // minimalize: drop entries whose LM is divisible by another entry's LM
    const size_t count = st.basis.size();
    std::vector<bool> keep(count, true);
    for (size_t a = 0; a < count; ++a)
        for (size_t b = 0; b < count && keep[a]; ++b) {
            if (a == b || !keep[b]) continue;
            const Monomial& la = st.basis[a].poly.leading().mon;
            const Monomial& lb = st.basis[b].poly.leading().mon;
            if (lb.divides(la) && !(la == lb && b > a)) keep[a] = false;
        }

    std::vector<Polynomial> minimal;
    for (size_t a = 0; a < count; ++a)
        if (keep[a]) minimal.push_back(st.basis[a].poly);
    std::sort(minimal.begin(), minimal.end(), [](const Polynomial& a, const Polynomial& b) {
        return a.leading().mon.compare(b.leading().mon) < 0;
    });

    // tail-reduce each element against the others
    std::vector<Polynomial> reduced;
    for (size_t a = 0; a < minimal.size(); ++a) {
        std::vector<BasisEntry> others;
        std::vector<int> order;
        for (size_t b = 0; b < minimal.size(); ++b) {
            if (b == a) continue;
            others.push_back({minimal[b], minimal[b].leading().mon.divmask()});
            order.push_back(static_cast<int>(others.size()) - 1);
        }
        Geobucket bucket(field);
        bucket.add_plain(minimal[a].terms());
        reduced.push_back(reduce_bucket(bucket, others, order, field));
    }
    return reduced;
}

Polynomial normal_form(const Polynomial& f, const std::vector<Polynomial>& basis,
                       const PrimeField& field) {
    std::vector<BasisEntry> entries;
    std::vector<int> order;
    for (const Polynomial& g : basis) {
        if (g.is_zero()) continue;
        Polynomial m = make_monic(g, field);
        entries.push_back({std::move(m), g.leading().mon.divmask()});
    }
    std::sort(entries.begin(), entries.end(), [](const BasisEntry& a, const BasisEntry& b) {
        return a.poly.leading().mon.compare(b.poly.leading().mon) < 0;
    });
    for (size_t i = 0; i < entries.size(); ++i) order.push_back(static_cast<int>(i));
    Geobucket bucket(field);
    bucket.add_plain(f.terms());
    return reduce_bucket(bucket, entries, order, field);
}

bool is_groebner_basis(const std::vector<Polynomial>& basis, const PrimeField& field) {
    std::vector<Polynomial> monic;
    for (const Polynomial& g : basis)
        if (!g.is_zero()) monic.push_back(make_monic(g, field));
    for (size_t i = 0; i < monic.size(); ++i)
        for (size_t j = i + 1; j < monic.size(); ++j) {
            Monomial l = Monomial::lcm(monic[i].leading().mon, monic[j].leading().mon);
            std::vector<Term> s;
            Monomial qi = Monomial::quotient(l, monic[i].leading().mon);
            Monomial qj = Monomial::quotient(l, monic[j].leading().mon);
            for (const Term& t : monic[i].terms()) s.push_back({Monomial::product(t.mon, qi), t.coeff});
            for (const Term& t : monic[j].terms())
                s.push_back({Monomial::product(t.mon, qj), field.neg(t.coeff)});
            if (!normal_form(Polynomial(std::move(s), field), monic, field).is_zero())
                return false;
        }
    return true;
}

std::optional<std::uint64_t> quotient_dimension(const std::vector<Polynomial>& basis,
                                                int nvars) {
    if (nvars < 0 || nvars > Monomial::max_vars)
        throw std::invalid_argument("variable count out of range");
    std::vector<Monomial> lms;
    for (const Polynomial& g : basis) {
        if (g.is_zero()) continue;
        if (g.leading().mon.is_one()) return 0;  // unit ideal, no solutions
        lms.push_back(g.leading().mon);
    }
    if (nvars == 0) return 1;
    if (lms.empty()) return std::nullopt;

    // finite dimension iff every variable has a pure power among the LMs
    std::vector<int> cap(static_cast<size_t>(nvars), -1);
    for (const Monomial& m : lms)
        for (int v = 0; v < nvars; ++v)
            if (m.exponent(v) == m.degree() && m.exponent(v) > 0) {
                if (cap[v] < 0 || m.degree() < cap[v]) cap[v] = m.degree();
                break;
            }
    for (int v = 0; v < nvars; ++v)
        if (cap[v] < 0) return std::nullopt;

    // group LMs by their highest variable so each DFS level checks only the
    // monomials that become fully determined there
    std::vector<std::vector<Monomial>> by_top(static_cast<size_t>(nvars));
    for (const Monomial& m : lms)
        for (int v = nvars - 1; v >= 0; --v)
            if (m.exponent(v) > 0) {
                by_top[v].push_back(m);
                break;
            }

    std::uint64_t count = 0;
    Monomial current;
    auto dfs = [&](auto&& self, int v) -> void {
        if (v == nvars) {
            ++count;
            return;
        }
        for (int e = 0; e < cap[v]; ++e) {
            current.set_exponent(v, e);
            bool divisible = false;
            for (const Monomial& m : by_top[v])
                if (m.divides(current)) {
                    divisible = true;
                    break;
                }
            if (divisible) break;  // larger exponents stay divisible
            self(self, v + 1);
        }
        current.set_exponent(v, 0);
    };
    dfs(dfs, 0);
    return count;
}

std::string dump(const Polynomial& f) {
    if (f.is_zero()) return "0";
    std::ostringstream out;
    bool first_term = true;
    for (const Term& t : f.terms()) {
        if (!first_term) out << " + ";
        first_term = false;
        out << t.coeff;
        for (int v = 0; v < Monomial::max_vars; ++v)
            if (int e = t.mon.exponent(v); e > 0) out << "*x" << (v + 1) << "^" << e;
    }
    return out.str();
}

std::string dump(const std::vector<Polynomial>& basis) {
    std::string out;
    for (const Polynomial& p : basis) {
        out += dump(p);
        out += '\n';
    }
    return out;
}

}  // namespace rigidity
