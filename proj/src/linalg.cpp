#include "diffbody/linalg.hpp"

#include <algorithm>
#include <cstddef>
#include <sstream>

namespace diffbody {

Rat dot(const Vec& a, const Vec& b) {
    Rat s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

Vec add(const Vec& a, const Vec& b) {
    Vec out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] + b[i];
    return out;
}

Vec sub(const Vec& a, const Vec& b) {
    Vec out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] - b[i];
    return out;
}

Vec scaled(const Vec& a, const Rat& s) {
    Vec out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] * s;
    return out;
}

Vec negated(const Vec& a) {
    Vec out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = -a[i];
    return out;
}

Vec zero_vec(int d) { return Vec(static_cast<std::size_t>(d), Rat(0)); }

bool is_zero(const Vec& a) {
    return std::all_of(a.begin(), a.end(), [](const Rat& x) { return x == 0; });
}

bool lex_less(const Vec& a, const Vec& b) {
    for (std::size_t i = 0; i < a.size() && i < b.size(); ++i) {
        if (a[i] < b[i]) return true;
        if (a[i] > b[i]) return false;
    }
    return a.size() < b.size();
}

std::string vec_str(const Vec& v) {
    std::ostringstream os;
    os << "(";
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) os << ", ";
        os << rat_str(v[i]);
    }
    os << ")";
    return os.str();
}

Int det_int(std::vector<std::vector<Int>> m) {
    const std::size_t n = m.size();
    if (n == 0) return 1;
    Int prev = 1;
    int sign = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (m[k][k] == 0) {
            std::size_t p = k + 1;
            while (p < n && m[p][k] == 0) ++p;
            if (p == n) return 0;
            std::swap(m[k], m[p]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                Int t = m[i][j] * m[k][k] - m[i][k] * m[k][j];
                mpz_divexact(m[i][j].get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
            }
            m[i][k] = 0;
        }
        prev = m[k][k];
    }
    return sign > 0 ? m[n - 1][n - 1] : Int(-m[n - 1][n - 1]);
}

namespace {

// Scales each row to integers; returns the product of the row scales.
std::vector<std::vector<Int>> rows_to_int(const Mat& m, Int& scale_product) {
    scale_product = 1;
    std::vector<std::vector<Int>> out(m.size());
    for (std::size_t i = 0; i < m.size(); ++i) {
        Int l = 1;
        for (const Rat& x : m[i]) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.get_den_mpz_t());
        out[i].resize(m[i].size());
        for (std::size_t j = 0; j < m[i].size(); ++j) {
            Rat v = m[i][j] * Rat(l);
            out[i][j] = v.get_num();  // den == 1 by construction
        }
        scale_product *= l;
    }
    return out;
}

}  // namespace

Rat det(Mat m) {
    if (m.empty()) return 1;
    Int scales;
    auto im = rows_to_int(m, scales);
    return rat(det_int(std::move(im)), scales);
}

int rank(Mat m) {
    const std::size_t rows = m.size();
    if (rows == 0) return 0;
    const std::size_t cols = m[0].size();
    int r = 0;
    for (std::size_t c = 0; c < cols && static_cast<std::size_t>(r) < rows; ++c) {
        std::size_t pivot = static_cast<std::size_t>(r);
        while (pivot < rows && m[pivot][c] == 0) ++pivot;
        if (pivot == rows) continue;
        std::swap(m[static_cast<std::size_t>(r)], m[pivot]);
        const Rat inv = m[static_cast<std::size_t>(r)][c];
        for (std::size_t i = static_cast<std::size_t>(r) + 1; i < rows; ++i) {
            if (m[i][c] == 0) continue;
            const Rat f = m[i][c] / inv;
            for (std::size_t j = c; j < cols; ++j) m[i][j] -= f * m[static_cast<std::size_t>(r)][j];
        }
        ++r;
    }
    return r;
}

int affine_rank(const std::vector<Vec>& points) {
    if (points.empty()) return -1;
    Mat diffs;
    diffs.reserve(points.size() - 1);
    for (std::size_t i = 1; i < points.size(); ++i) diffs.push_back(sub(points[i], points[0]));
    return rank(std::move(diffs));
}

Vec hyperplane_normal(const std::vector<Vec>& points) {
    const std::size_t d = points[0].size();
    Mat edges;
    edges.reserve(d - 1);
    for (std::size_t i = 1; i < d; ++i) edges.push_back(sub(points[i], points[0]));
    Int scales;
    auto im = rows_to_int(edges, scales);  // (d-1) x d integer matrix

    Vec normal(d);
    Int content = 0;
    for (std::size_t skip = 0; skip < d; ++skip) {
        std::vector<std::vector<Int>> minor(d - 1);
        for (std::size_t i = 0; i + 1 < d; ++i) {
            minor[i].reserve(d - 1);
            for (std::size_t j = 0; j < d; ++j)
                if (j != skip) minor[i].push_back(im[i][j]);
        }
        Int cof = det_int(std::move(minor));
        if (skip % 2 == 1) cof = -cof;
        mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), cof.get_mpz_t());
        normal[skip] = Rat(cof);
    }
    if (content == 0) return zero_vec(static_cast<int>(d));
    for (Rat& x : normal) x = rat(x.get_num() / content, 1);
    return normal;
}

std::vector<Rat> solve_linear(Mat m, Vec rhs) {
    const std::size_t n = m.size();
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t pivot = c;
        while (pivot < n && m[pivot][c] == 0) ++pivot;
        if (pivot == n) return {};
        std::swap(m[c], m[pivot]);
        std::swap(rhs[c], rhs[pivot]);
        for (std::size_t i = 0; i < n; ++i) {
            if (i == c || m[i][c] == 0) continue;
            const Rat f = m[i][c] / m[c][c];
            for (std::size_t j = c; j < n; ++j) m[i][j] -= f * m[c][j];
            rhs[i] -= f * rhs[c];
        }
    }
    std::vector<Rat> x(n);
    for (std::size_t i = 0; i < n; ++i) x[i] = rhs[i] / m[i][i];
    return x;
}

}  // namespace diffbody
