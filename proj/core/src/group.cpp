#include "symquot/group.hpp"

#include "symquot/ints.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <sstream>

namespace symquot {

namespace {

struct group_error : arith_error {
    using arith_error::arith_error;
};

using Table = std::vector<std::vector<std::uint16_t>>;

Table cyclic_table(unsigned n) {
    Table t(n, std::vector<std::uint16_t>(n));
    for (unsigned a = 0; a < n; ++a) {
        for (unsigned b = 0; b < n; ++b) t[a][b] = static_cast<std::uint16_t>((a + b) % n);
    }
    return t;
}

/// Groups <s, t : s^m, t^r = s^w, t s t^{-1} = s^act> with element normal
/// form s^a t^e (e < r), indexed a + m*e.
Table two_gen_table(unsigned m, unsigned r, unsigned w, unsigned act) {
    unsigned n = m * r;
    // act^e mod m
    std::vector<std::uint64_t> acte(r, 1);
    for (unsigned e = 1; e < r; ++e) acte[e] = acte[e - 1] * act % m;
    Table t(n, std::vector<std::uint16_t>(n));
    for (unsigned e = 0; e < r; ++e) {
        for (unsigned a = 0; a < m; ++a) {
            unsigned x = a + m * e;
            for (unsigned f = 0; f < r; ++f) {
                for (unsigned b = 0; b < m; ++b) {
                    // s^a t^e s^b t^f = s^(a + b*act^e) t^(e+f), folding
                    // t^r = s^w when the t-exponent wraps
                    unsigned ef = e + f;
                    std::uint64_t aa = a + b * acte[e];
                    if (ef >= r) {
                        ef -= r;
                        aa += w;
                    }
                    t[x][b + m * f] = static_cast<std::uint16_t>(aa % m + m * ef);
                }
            }
        }
    }
    return t;
}

Table heisenberg_table(unsigned p) {
    unsigned n = p * p * p;
    auto idx = [p](unsigned a, unsigned b, unsigned c) { return (a * p + b) * p + c; };
    Table t(n, std::vector<std::uint16_t>(n));
    for (unsigned a = 0; a < p; ++a) {
        for (unsigned b = 0; b < p; ++b) {
            for (unsigned c = 0; c < p; ++c) {
                for (unsigned a2 = 0; a2 < p; ++a2) {
                    for (unsigned b2 = 0; b2 < p; ++b2) {
                        for (unsigned c2 = 0; c2 < p; ++c2) {
                            t[idx(a, b, c)][idx(a2, b2, c2)] = static_cast<std::uint16_t>(
                                idx((a + a2) % p, (b + b2) % p, (c + c2 + a * b2) % p));
                        }
                    }
                }
            }
        }
    }
    return t;
}

Table wreath_table(unsigned p) {
    // C_p wr C_p: (a; r)(b; s) = (a + rho^r(b); r + s), rho the cyclic shift
    unsigned np = 1;
    for (unsigned i = 0; i < p; ++i) np *= p;
    unsigned n = np * p;
    if (n > 60000) throw group_error("wreath: order too large for a table");
    auto decode = [p](unsigned v, std::vector<unsigned>& a) {
        for (unsigned i = 0; i < p; ++i) {
            a[i] = v % p;
            v /= p;
        }
    };
    auto encode = [p](const std::vector<unsigned>& a) {
        unsigned v = 0;
        for (unsigned i = p; i-- > 0;) v = v * p + a[i];
        return v;
    };
    Table t(n, std::vector<std::uint16_t>(n));
    std::vector<unsigned> a(p), b(p), c(p);
    for (unsigned va = 0; va < np; ++va) {
        decode(va, a);
        for (unsigned r = 0; r < p; ++r) {
            unsigned x = r * np + va;
            for (unsigned vb = 0; vb < np; ++vb) {
                decode(vb, b);
                for (unsigned s = 0; s < p; ++s) {
                    for (unsigned i = 0; i < p; ++i) c[(i + r) % p] = b[i];
                    for (unsigned i = 0; i < p; ++i) c[i] = (c[i] + a[i]) % p;
                    t[x][s * np + vb] =
                        static_cast<std::uint16_t>(((r + s) % p) * np + encode(c));
                }
            }
        }
    }
    return t;
}

Table product_table(const Group& A, const Group& B) {
    unsigned n = A.order() * B.order();
    if (n > 60000) throw group_error("product: order too large for a table");
    Table t(n, std::vector<std::uint16_t>(n));
    unsigned nb = B.order();
    for (unsigned a1 = 0; a1 < A.order(); ++a1) {
        for (unsigned b1 = 0; b1 < nb; ++b1) {
            for (unsigned a2 = 0; a2 < A.order(); ++a2) {
                for (unsigned b2 = 0; b2 < nb; ++b2) {
                    t[a1 * nb + b1][a2 * nb + b2] =
                        static_cast<std::uint16_t>(A.mul(a1, a2) * nb + B.mul(b1, b2));
                }
            }
        }
    }
    return t;
}

Table read_table_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw group_error("file group: cannot open " + path);
    unsigned n = 0;
    if (!(in >> n) || n == 0 || n > 60000) throw group_error("file group: bad order line");
    Table t(n, std::vector<std::uint16_t>(n));
    for (unsigned i = 0; i < n; ++i) {
        for (unsigned j = 0; j < n; ++j) {
            long v = 0;
            if (!(in >> v) || v < 1 || v > static_cast<long>(n)) {
                throw group_error("file group: bad entry");
            }
            t[i][j] = static_cast<std::uint16_t>(v - 1);  // to 0-based
        }
    }
    return t;
}

unsigned parse_unsigned(const std::string& s) {
    if (s.empty() || s.find_first_not_of("0123456789") != std::string::npos) {
        throw group_error("group spec: expected a number, got '" + s + "'");
    }
    unsigned long v = std::stoul(s);
    if (v == 0 || v > 60000) throw group_error("group spec: number out of range");
    return static_cast<unsigned>(v);
}

}  // namespace

unsigned Group::pow(unsigned a, long e) const {
    unsigned r = 0;
    unsigned base = a;
    unsigned long k;
    if (e >= 0) {
        k = static_cast<unsigned long>(e);
    } else {
        base = inverse_[a];
        k = static_cast<unsigned long>(-e);
    }
    while (k > 0) {
        if (k & 1) r = table_[r][base];
        base = table_[base][base];
        k >>= 1;
    }
    return r;
}

bool Group::is_cyclic() const {
    return std::any_of(elt_order_.begin(), elt_order_.end(),
                       [this](unsigned o) { return o == n_; });
}

void Group::finalize(bool full_assoc_check) {
    n_ = static_cast<unsigned>(table_.size());
    if (n_ == 0) throw group_error("group: empty table");
    for (const auto& row : table_) {
        if (row.size() != n_) throw group_error("group: ragged table");
        for (auto v : row) {
            if (v >= n_) throw group_error("group: entry out of range");
        }
    }
    // identity must be element 0
    for (unsigned a = 0; a < n_; ++a) {
        if (table_[0][a] != a || table_[a][0] != a) {
            throw group_error("group: element 1 is not the identity");
        }
    }
    // rows and columns are permutations
    for (unsigned a = 0; a < n_; ++a) {
        std::vector<bool> seen_r(n_, false), seen_c(n_, false);
        for (unsigned b = 0; b < n_; ++b) {
            if (seen_r[table_[a][b]] || seen_c[table_[b][a]]) {
                throw group_error("group: table is not a Latin square");
            }
            seen_r[table_[a][b]] = true;
            seen_c[table_[b][a]] = true;
        }
    }
    // associativity: full check for file input, random spot checks otherwise
    if (full_assoc_check) {
        for (unsigned a = 0; a < n_; ++a) {
            for (unsigned b = 0; b < n_; ++b) {
                std::uint16_t ab = table_[a][b];
                for (unsigned c = 0; c < n_; ++c) {
                    if (table_[ab][c] != table_[a][table_[b][c]]) {
                        throw group_error("group: table is not associative");
                    }
                }
            }
        }
    } else {
        std::mt19937 rng(0xABCD);
        std::uniform_int_distribution<unsigned> d(0, n_ - 1);
        for (int it = 0; it < 512; ++it) {
            unsigned a = d(rng), b = d(rng), c = d(rng);
            if (table_[table_[a][b]][c] != table_[a][table_[b][c]]) {
                throw group_error("group: family table failed associativity spot check");
            }
        }
    }
    inverse_.assign(n_, 0);
    for (unsigned a = 0; a < n_; ++a) {
        for (unsigned b = 0; b < n_; ++b) {
            if (table_[a][b] == 0) {
                inverse_[a] = static_cast<std::uint16_t>(b);
                break;
            }
        }
    }
    elt_order_.assign(n_, 0);
    exponent_ = 1;
    for (unsigned a = 0; a < n_; ++a) {
        unsigned o = 1;
        unsigned x = a;
        while (x != 0) {
            x = table_[x][a];
            ++o;
        }
        elt_order_[a] = o;
        exponent_ = static_cast<unsigned>(std::lcm(exponent_, o));
    }
    // conjugacy classes; representatives are minimal in index order
    class_of_.assign(n_, n_);
    for (unsigned x = 0; x < n_; ++x) {
        if (class_of_[x] != n_) continue;
        unsigned c = static_cast<unsigned>(classes_.size());
        std::set<unsigned> members;
        for (unsigned g = 0; g < n_; ++g) {
            members.insert(table_[table_[g][x]][inverse_[g]]);
        }
        classes_.emplace_back(members.begin(), members.end());
        for (unsigned y : classes_.back()) class_of_[y] = c;
    }
    for (unsigned x = 0; x < n_; ++x) {
        if (class_of_[class_members(class_of_[x])[0]] != class_of_[x]) {
            throw group_error("group: class bookkeeping failure");
        }
    }
    for (unsigned x = 0; x < n_; ++x) {
        bool central = true;
        for (unsigned g = 0; g < n_ && central; ++g) {
            central = table_[x][g] == table_[g][x];
        }
        if (central) center_.push_back(x);
    }
}

std::shared_ptr<const Group> Group::from_table(Table table, std::string name,
                                               bool full_assoc_check) {
    auto g = std::shared_ptr<Group>(new Group());
    g->table_ = std::move(table);
    g->name_ = std::move(name);
    g->finalize(full_assoc_check);
    return g;
}

std::shared_ptr<const Group> Group::build(const std::string& spec) {
    auto colon = spec.find(':');
    std::string kind = colon == std::string::npos ? spec : spec.substr(0, colon);
    std::string rest = colon == std::string::npos ? "" : spec.substr(colon + 1);

    if (kind == "cyclic") {
        unsigned n = parse_unsigned(rest);
        return from_table(cyclic_table(n), spec, false);
    }
    if (kind == "dihedral") {
        unsigned n = parse_unsigned(rest);
        if (n < 2 || n % 2 != 0) throw group_error("dihedral: order must be even and >= 2");
        return from_table(two_gen_table(n / 2, 2, 0, n / 2 - 1), spec, false);
    }
    if (kind == "quaternion") {
        unsigned n = parse_unsigned(rest);
        if (n < 8 || (n & (n - 1)) != 0) {
            throw group_error("quaternion: order must be a power of 2, >= 8");
        }
        return from_table(two_gen_table(n / 2, 2, n / 4, n / 2 - 1), spec, false);
    }
    if (kind == "semidihedral") {
        unsigned n = parse_unsigned(rest);
        if (n < 16 || (n & (n - 1)) != 0) {
            throw group_error("semidihedral: order must be a power of 2, >= 16");
        }
        return from_table(two_gen_table(n / 2, 2, 0, 1 + n / 4), spec, false);
    }
    if (kind == "quasidihedral") {
        unsigned n = parse_unsigned(rest);
        if (n < 16 || (n & (n - 1)) != 0) {
            throw group_error("quasidihedral: order must be a power of 2, >= 16");
        }
        return from_table(two_gen_table(n / 2, 2, 0, n / 4 - 1), spec, false);
    }
    if (kind == "modular") {
        unsigned n = parse_unsigned(rest);
        auto ps = prime_factors_u64(n);
        if (ps.size() != 1) throw group_error("modular: order must be a prime power");
        unsigned p = static_cast<unsigned>(ps[0]);
        unsigned k = static_cast<unsigned>(padic_val_u64(n, p));
        if (k < 3) throw group_error("modular: order must be p^k with k >= 3");
        unsigned m = n / p;  // p^(k-1)
        return from_table(two_gen_table(m, p, 0, 1 + m / p), spec, false);
    }
    if (kind == "extraspecial") {
        auto colon2 = rest.find(':');
        if (colon2 == std::string::npos) throw group_error("extraspecial: expected p:+ or p:-");
        unsigned num = parse_unsigned(rest.substr(0, colon2));
        std::string sign = rest.substr(colon2 + 1);
        unsigned p = num;
        // accept the order form p^3 as well
        if (!is_prime_u64(num)) {
            auto ps = prime_factors_u64(num);
            if (ps.size() == 1 && pow_u64(ps[0], 3) == num) {
                p = static_cast<unsigned>(ps[0]);
            } else {
                throw group_error("extraspecial: expected a prime or a cube of a prime");
            }
        }
        if (sign != "+" && sign != "-") throw group_error("extraspecial: sign must be + or -");
        if (p == 2) {
            // conventional: + is D_8, - is Q_8
            return sign == "+" ? from_table(two_gen_table(4, 2, 0, 3), spec, false)
                               : from_table(two_gen_table(4, 2, 2, 3), spec, false);
        }
        if (sign == "+") return from_table(heisenberg_table(p), spec, false);
        return from_table(two_gen_table(p * p, p, 0, 1 + p), spec, false);
    }
    if (kind == "wreath") {
        unsigned p = parse_unsigned(rest);
        if (!is_prime_u64(p)) throw group_error("wreath: parameter must be prime");
        return from_table(wreath_table(p), spec, false);
    }
    if (kind == "product") {
        // fold on '*': product:A*B*... with factor specs free of '*'
        std::vector<std::string> parts;
        std::string cur;
        for (char ch : rest) {
            if (ch == '*') {
                parts.push_back(cur);
                cur.clear();
            } else {
                cur.push_back(ch);
            }
        }
        parts.push_back(cur);
        if (parts.size() < 2) throw group_error("product: expected at least two factors");
        GroupPtr acc = build(parts[0]);
        for (size_t i = 1; i < parts.size(); ++i) {
            GroupPtr b = build(parts[i]);
            acc = from_table(product_table(*acc, *b), spec, false);
        }
        return acc;
    }
    if (kind == "file") {
        return from_table(read_table_file(rest), spec, true);
    }
    throw group_error("unknown group spec kind: '" + kind + "'");
}

std::vector<unsigned> Group::closure(std::vector<unsigned> gens) const {
    std::vector<bool> in(n_, false);
    std::vector<unsigned> members{0};
    in[0] = true;
    for (unsigned g : gens) {
        if (!in[g]) {
            in[g] = true;
            members.push_back(g);
        }
    }
    bool grew = true;
    while (grew) {
        grew = false;
        size_t sz = members.size();
        for (size_t i = 0; i < sz; ++i) {
            for (size_t j = 0; j < sz; ++j) {
                unsigned y = table_[members[i]][members[j]];
                if (!in[y]) {
                    in[y] = true;
                    members.push_back(y);
                    grew = true;
                }
            }
        }
    }
    std::sort(members.begin(), members.end());
    return members;
}

bool Group::is_subgroup(const std::vector<unsigned>& elems) const {
    std::vector<bool> in(n_, false);
    for (unsigned x : elems) {
        if (x >= n_) return false;
        in[x] = true;
    }
    if (!in[0]) return false;
    for (unsigned a : elems) {
        for (unsigned b : elems) {
            if (!in[table_[a][b]]) return false;
        }
    }
    return true;
}

std::vector<std::vector<unsigned>> Group::subgroups_up_to(unsigned max_order) const {
    std::set<std::vector<unsigned>> seen;
    std::vector<std::vector<unsigned>> frontier;
    std::vector<unsigned> trivial{0};
    seen.insert(trivial);
    frontier.push_back(trivial);
    while (!frontier.empty()) {
        std::vector<std::vector<unsigned>> next;
        for (const auto& S : frontier) {
            for (unsigned g = 1; g < n_; ++g) {
                if (std::binary_search(S.begin(), S.end(), g)) continue;
                std::vector<unsigned> gens = S;
                gens.push_back(g);
                std::vector<unsigned> T = closure(gens);
                if (T.size() > max_order) continue;
                if (seen.insert(T).second) next.push_back(T);
            }
        }
        frontier = std::move(next);
    }
    std::vector<std::vector<unsigned>> out(seen.begin(), seen.end());
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
        if (a.size() != b.size()) return a.size() < b.size();
        return a < b;
    });
    return out;
}

std::vector<unsigned> Group::commutator_subgroup() const {
    std::vector<unsigned> gens;
    for (unsigned a = 0; a < n_; ++a) {
        for (unsigned b = 0; b < n_; ++b) {
            gens.push_back(table_[table_[a][b]][table_[inverse_[a]][inverse_[b]]]);
        }
    }
    std::sort(gens.begin(), gens.end());
    gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
    return closure(gens);
}

Group::Sub Group::subgroup(const std::vector<unsigned>& elems) const {
    if (!is_subgroup(elems)) throw group_error("subgroup: element list is not a subgroup");
    Sub out;
    out.to_parent = elems;
    std::sort(out.to_parent.begin(), out.to_parent.end());
    // identity must sit at index 0; elems are sorted so elems[0] == 0
    out.from_parent.assign(n_, -1);
    for (size_t i = 0; i < out.to_parent.size(); ++i) {
        out.from_parent[out.to_parent[i]] = static_cast<int>(i);
    }
    unsigned h = static_cast<unsigned>(out.to_parent.size());
    Table t(h, std::vector<std::uint16_t>(h));
    for (unsigned i = 0; i < h; ++i) {
        for (unsigned j = 0; j < h; ++j) {
            int k = out.from_parent[table_[out.to_parent[i]][out.to_parent[j]]];
            if (k < 0) throw group_error("subgroup: not closed");
            t[i][j] = static_cast<std::uint16_t>(k);
        }
    }
    out.group = from_table(std::move(t), name_ + "|sub" + std::to_string(h), false);
    return out;
}

Group::Quot Group::quotient(const std::vector<unsigned>& normal_subgroup) const {
    if (!is_subgroup(normal_subgroup)) throw group_error("quotient: not a subgroup");
    std::vector<bool> in(n_, false);
    for (unsigned x : normal_subgroup) in[x] = true;
    for (unsigned g = 0; g < n_; ++g) {
        for (unsigned x : normal_subgroup) {
            if (!in[table_[table_[g][x]][inverse_[g]]]) {
                throw group_error("quotient: subgroup is not normal");
            }
        }
    }
    Quot out;
    out.proj.assign(n_, n_);
    std::vector<unsigned> reps;
    for (unsigned g = 0; g < n_; ++g) {
        if (out.proj[g] != n_) continue;
        unsigned c = static_cast<unsigned>(reps.size());
        reps.push_back(g);
        for (unsigned x : normal_subgroup) out.proj[table_[g][x]] = c;
    }
    unsigned q = static_cast<unsigned>(reps.size());
    Table t(q, std::vector<std::uint16_t>(q));
    for (unsigned i = 0; i < q; ++i) {
        for (unsigned j = 0; j < q; ++j) {
            t[i][j] = static_cast<std::uint16_t>(out.proj[table_[reps[i]][reps[j]]]);
        }
    }
    out.group = from_table(std::move(t), name_ + "|quot" + std::to_string(q), false);
    return out;
}

std::vector<unsigned> Group::p_regular_classes(std::uint64_t p) const {
    std::vector<unsigned> out;
    for (unsigned c = 0; c < class_count(); ++c) {
        if (elt_order_[class_rep(c)] % p != 0) out.push_back(c);
    }
    return out;
}

bool Group::is_p_nilpotent(std::uint64_t p) const {
    // p-nilpotent iff the p'-elements are closed under multiplication
    std::vector<unsigned> pprime;
    std::vector<bool> in(n_, false);
    for (unsigned x = 0; x < n_; ++x) {
        if (elt_order_[x] % p != 0) {
            pprime.push_back(x);
            in[x] = true;
        }
    }
    for (unsigned a : pprime) {
        for (unsigned b : pprime) {
            if (!in[table_[a][b]]) return false;
        }
    }
    return true;
}

bool Group::sylow_is_cyclic(std::uint64_t p) const {
    unsigned ppart = 1;
    unsigned nn = n_;
    while (nn % p == 0) {
        nn /= static_cast<unsigned>(p);
        ppart *= static_cast<unsigned>(p);
    }
    if (ppart == 1) return true;
    return std::any_of(elt_order_.begin(), elt_order_.end(),
                       [ppart](unsigned o) { return o == ppart; });
}

}  // namespace symquot
