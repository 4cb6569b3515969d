#include "yw/liealg.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>
#include <unordered_map>

#include <boost/multiprecision/cpp_int.hpp>

namespace yw {

using boost::multiprecision::cpp_rational;

Family parse_family(const std::string& s) {
    if (s == "A") return Family::A;
    if (s == "B") return Family::B;
    if (s == "C") return Family::C;
    if (s == "D") return Family::D;
    throw std::invalid_argument("unknown family '" + s + "'");
}

char family_char(Family f) { return static_cast<char>(f); }

static std::vector<std::vector<int>> classical_cartan(Family f, int n) {
    std::vector<std::vector<int>> A(n, std::vector<int>(n, 0));
    for (int i = 0; i < n; ++i) A[i][i] = 2;
    if (f == Family::D) {
        for (int i = 0; i + 2 < n; ++i) A[i][i + 1] = A[i + 1][i] = -1;
        A[n - 3][n - 1] = A[n - 1][n - 3] = -1;
        return A;
    }
    for (int i = 0; i + 1 < n; ++i) A[i][i + 1] = A[i + 1][i] = -1;
    // B: alpha_n short, so <h_n, alpha_{n-1}> = -2
    if (f == Family::B && n >= 2) A[n - 1][n - 2] = -2;
    if (f == Family::C && n >= 2) A[n - 2][n - 1] = -2;
    return A;
}

RootDatum RootDatum::make(Family f, int n) {
    int minimum = f == Family::A ? 1 : f == Family::D ? 4 : 2;
    if (n < minimum) throw std::invalid_argument("rank too small for family");
    RootDatum rd;
    rd.family = f;
    rd.n = n;
    rd.cartan = classical_cartan(f, n);
    rd.half_len.assign(n, 1);
    if (f == Family::B)
        for (int i = 0; i + 1 < n; ++i) rd.half_len[i] = 2;
    if (f == Family::C) rd.half_len[n - 1] = 2;

    // closure under alpha-strings: r + alpha_j is a root iff q > 0 with p - q = <h_j, r>
    std::set<RootVector> roots;
    std::vector<RootVector> layer;
    for (int i = 0; i < n; ++i) {
        RootVector r(n, 0);
        r[i] = 1;
        roots.insert(r);
        layer.push_back(r);
    }
    while (!layer.empty()) {
        std::vector<RootVector> next;
        for (const auto& r : layer) {
            for (int j = 0; j < n; ++j) {
                int p = 0;
                RootVector x = r;
                while (true) {
                    x[j] -= 1;
                    if (roots.count(x)) ++p;
                    else break;
                }
                int h = 0;
                for (int i = 0; i < n; ++i) h += r[i] * rd.cartan[j][i];
                if (p - h > 0) {
                    RootVector y = r;
                    y[j] += 1;
                    if (roots.insert(y).second) next.push_back(y);
                }
            }
        }
        layer = std::move(next);
    }
    rd.positive_roots.assign(roots.begin(), roots.end());
    rd.two_rho.assign(n, 0);
    for (const auto& r : rd.positive_roots)
        for (int i = 0; i < n; ++i) rd.two_rho[i] += r[i];
    return rd;
}

WeightVector RootDatum::root_weight(const RootVector& r) const {
    WeightVector w(n, 0);
    for (int j = 0; j < n; ++j)
        for (int i = 0; i < n; ++i) w[j] += r[i] * cartan[j][i];
    return w;
}

WeightVector RootDatum::simple_root_weight(int i) const {
    RootVector r(n, 0);
    r.at(i) = 1;
    return root_weight(r);
}

std::string affine_name(AffineType t) {
    switch (t) {
    case AffineType::A1: return "A1";
    case AffineType::A2tw: return "A2tw";
    case AffineType::B1: return "B1";
    case AffineType::D1: return "D1";
    }
    return "?";
}

AffineType parse_affine(const std::string& s) {
    if (s == "A1") return AffineType::A1;
    if (s == "A2tw") return AffineType::A2tw;
    if (s == "B1") return AffineType::B1;
    if (s == "D1") return AffineType::D1;
    throw std::invalid_argument("unknown affine type '" + s + "'");
}

AffineType affine_for(Family f) {
    switch (f) {
    case Family::A: return AffineType::A1;
    case Family::B: return AffineType::B1;
    case Family::C: return AffineType::A2tw;
    case Family::D: return AffineType::D1;
    }
    throw std::invalid_argument("family");
}

AffineDatum AffineDatum::make(AffineType t, int n) {
    int m = n + 1;
    AffineDatum ad;
    ad.type = t;
    ad.n = n;
    auto& A = ad.cartan;
    A.assign(m, std::vector<int>(m, 0));
    for (int i = 0; i < m; ++i) A[i][i] = 2;
    auto link = [&](int i, int j, int a, int b) { A[i][j] = a; A[j][i] = b; };
    switch (t) {
    case AffineType::A1:
        if (n == 1) {
            A[0][1] = A[1][0] = -2;
        } else {
            for (int i = 0; i < m; ++i) link(i, (i + 1) % m, -1, -1);
        }
        ad.marks.assign(m, 1);
        break;
    case AffineType::B1:
    case AffineType::A2tw:
    case AffineType::D1:
        if (n < 3 || (t == AffineType::D1 && n < 4))
            throw std::invalid_argument("rank too small for affine type");
        link(0, 2, -1, -1);
        link(1, 2, -1, -1);
        for (int i = 2; i < n - 1; ++i) link(i, i + 1, -1, -1);
        ad.marks.assign(m, 2);
        ad.marks[0] = ad.marks[1] = 1;
        if (t == AffineType::B1) {
            A[n - 1][n] = -1;
            A[n][n - 1] = -2;
        } else if (t == AffineType::A2tw) {
            A[n - 1][n] = -2;
            A[n][n - 1] = -1;
            ad.marks[n] = 1;
        } else {
            A[n - 1][n] = A[n][n - 1] = 0;
            link(n - 2, n, -1, -1);
            ad.marks[n - 1] = ad.marks[n] = 1;
        }
        break;
    }
    return ad;
}

OmegaDecomposition decompose(Family f, int n, const DominantWeight& c) {
    if (static_cast<int>(c.size()) != n) throw std::invalid_argument("lambda length must equal rank");
    for (int x : c)
        if (x < 0) throw std::invalid_argument("lambda is not dominant");
    OmegaDecomposition d;
    auto push = [&](int i, int times) { d.omegas.insert(d.omegas.end(), times, i); };
    switch (f) {
    case Family::A:
    case Family::C:
        for (int i = 0; i < n; ++i) push(i + 1, c[i]);
        break;
    case Family::B:
        for (int i = 0; i + 1 < n; ++i) push(i + 1, c[i]);
        push(n, c[n - 1] / 2);
        d.spin = {c[n - 1] % 2, 0};
        break;
    case Family::D: {
        for (int i = 0; i + 2 < n; ++i) push(i + 1, c[i]);
        int x = c[n - 2], y = c[n - 1];
        push(n - 1, std::min(x, y));
        int dd = std::abs(y - x);
        push(y > x ? n : n + 1, dd / 2);
        if (dd % 2) d.spin = x > y ? std::pair{1, 0} : std::pair{0, 1};
        break;
    }
    }
    std::sort(d.omegas.begin(), d.omegas.end());
    return d;
}

DominantWeight reconstruct(Family f, int n, const OmegaDecomposition& d) {
    DominantWeight c(n, 0);
    for (int i : d.omegas) {
        if (f == Family::B && i == n) c[n - 1] += 2;
        else if (f == Family::D && i == n - 1) { c[n - 2] += 1; c[n - 1] += 1; }
        else if (f == Family::D && i == n) c[n - 1] += 2;
        else if (f == Family::D && i == n + 1) c[n - 2] += 2;
        else c.at(i - 1) += 1;
    }
    if (f == Family::B) c[n - 1] += d.spin.first;
    if (f == Family::D) { c[n - 2] += d.spin.first; c[n - 1] += d.spin.second; }
    return c;
}

int choose_level_one(Family f, int n, const OmegaDecomposition& d) {
    long s = 0;
    for (int i : d.omegas) s += std::min(i, n);
    if (f == Family::A) return static_cast<int>(s % (n + 1));
    if (f == Family::B && d.spin.first) return n;
    if (f == Family::D && d.has_spin()) {
        int spin = d.spin.first ? n - 1 : n;
        if (s % 2) spin = 2 * n - 1 - spin;
        return spin;
    }
    return s % 2 ? 1 : 0;
}

BigInt weyl_dimension(const RootDatum& rd, const DominantWeight& lambda) {
    if (static_cast<int>(lambda.size()) != rd.n) throw std::invalid_argument("lambda length must equal rank");
    BigInt num = 1, den = 1;
    for (const auto& r : rd.positive_roots) {
        long a = 0, b = 0;
        for (int i = 0; i < rd.n; ++i) {
            a += static_cast<long>(r[i]) * rd.half_len[i] * (lambda[i] + 1);
            b += static_cast<long>(r[i]) * rd.half_len[i];
        }
        num *= a;
        den *= b;
    }
    return num / den;
}

namespace {

struct VecHash {
    std::size_t operator()(const std::vector<int>& v) const noexcept {
        std::size_t h = 1469598103934665603ull;
        for (int x : v) h = (h ^ static_cast<std::size_t>(x + 0x9e37)) * 1099511628211ull;
        return h;
    }
};

// Integer Gram matrix of the invariant form on weights, scaled by a common denominator.
std::vector<std::vector<long>> scaled_gram(const RootDatum& rd) {
    int n = rd.n;
    // invert the Cartan matrix over the rationals
    std::vector<std::vector<cpp_rational>> M(n, std::vector<cpp_rational>(2 * n));
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) M[i][j] = rd.cartan[i][j];
        M[i][n + i] = 1;
    }
    for (int col = 0; col < n; ++col) {
        int piv = col;
        while (M[piv][col] == 0) ++piv;
        std::swap(M[piv], M[col]);
        cpp_rational p = M[col][col];
        for (auto& x : M[col]) x /= p;
        for (int r = 0; r < n; ++r) {
            if (r == col || M[r][col] == 0) continue;
            cpp_rational m = M[r][col];
            for (int k = 0; k < 2 * n; ++k) M[r][k] -= m * M[col][k];
        }
    }
    // (mu, nu) = sum_k c_k d_k nu_k with c = A^{-1} mu, so G[i][j] = Ainv[j][i] * d_j
    std::vector<std::vector<cpp_rational>> G(n, std::vector<cpp_rational>(n));
    BigInt lcm = 1;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            G[i][j] = M[j][n + i] * rd.half_len[j];
            BigInt d = boost::multiprecision::denominator(G[i][j]);
            lcm = lcm / boost::multiprecision::gcd(lcm, d) * d;
        }
    std::vector<std::vector<long>> out(n, std::vector<long>(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            cpp_rational v = G[i][j] * cpp_rational(lcm);
            out[i][j] = static_cast<long>(boost::multiprecision::numerator(v));
        }
    return out;
}

} // namespace

WeightMultiplicities freudenthal_multiplicities(const RootDatum& rd, const DominantWeight& lambda) {
    const int n = rd.n;
    if (static_cast<int>(lambda.size()) != n) throw std::invalid_argument("lambda length must equal rank");
    auto G = scaled_gram(rd);
    auto form = [&](const WeightVector& a, const WeightVector& b) {
        long s = 0;
        for (int i = 0; i < n; ++i) {
            if (!a[i]) continue;
            for (int j = 0; j < n; ++j) s += static_cast<long>(a[i]) * G[i][j] * b[j];
        }
        return s;
    };
    std::vector<WeightVector> roots;
    for (const auto& r : rd.positive_roots) roots.push_back(rd.root_weight(r));
    std::vector<WeightVector> simple;
    for (int i = 0; i < n; ++i) simple.push_back(rd.simple_root_weight(i));

    WeightVector lr(n);
    for (int i = 0; i < n; ++i) lr[i] = lambda[i] + 1;
    const long top = form(lr, lr);

    std::unordered_map<WeightVector, std::uint64_t, VecHash> mult;
    mult[lambda] = 1;
    std::vector<WeightVector> level{lambda};
    while (!level.empty()) {
        std::set<WeightVector> cand;
        for (const auto& mu : level)
            for (const auto& a : simple) {
                WeightVector x = mu;
                for (int j = 0; j < n; ++j) x[j] -= a[j];
                cand.insert(std::move(x));
            }
        std::vector<WeightVector> next;
        for (const auto& mu : cand) {
            if (mult.count(mu)) continue;
            long num = 0;
            for (const auto& a : roots) {
                WeightVector x = mu;
                while (true) {
                    for (int j = 0; j < n; ++j) x[j] += a[j];
                    auto it = mult.find(x);
                    if (it == mult.end()) break;
                    num += static_cast<long>(it->second) * form(x, a);
                }
            }
            if (num == 0) continue;
            WeightVector mr(n);
            for (int i = 0; i < n; ++i) mr[i] = mu[i] + 1;
            long den = top - form(mr, mr);
            if (den <= 0 || (2 * num) % den != 0)
                throw std::logic_error("freudenthal recursion produced a non-integer multiplicity");
            mult[mu] = static_cast<std::uint64_t>(2 * num / den);
            next.push_back(mu);
        }
        level = std::move(next);
    }
    return WeightMultiplicities(mult.begin(), mult.end());
}

int pairing(const WeightVector& w, int j) {
    if (j < 1 || j > static_cast<int>(w.size())) throw std::out_of_range("pairing index out of range");
    return w[j - 1];
}

WeightVector reflect(const RootDatum& rd, const WeightVector& w, int j) {
    WeightVector a = rd.simple_root_weight(j - 1);
    int k = pairing(w, j);
    WeightVector out = w;
    for (int i = 0; i < rd.n; ++i) out[i] -= k * a[i];
    return out;
}

} // namespace yw
