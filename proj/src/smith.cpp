#include <climits>
#include <cstdint>
#include <utility>

#include "cutcx/error.hpp"
#include "cutcx/homology.hpp"

namespace cutcx {

namespace {

struct Overflow {};

struct Machine {
    using T = std::int64_t;
    static T abs(T a) {
        if (a == INT64_MIN) throw Overflow{};
        return a < 0 ? -a : a;
    }
    static T sub_mul(T x, T q, T y) {
        T p, r;
        if (__builtin_mul_overflow(q, y, &p) || __builtin_sub_overflow(x, p, &r)) throw Overflow{};
        return r;
    }
    static T add(T x, T y) {
        T r;
        if (__builtin_add_overflow(x, y, &r)) throw Overflow{};
        return r;
    }
    static T quot(T x, T y) {
        if (x == INT64_MIN && y == -1) throw Overflow{};
        return x / y;
    }
    static bool divides(T p, T x) { return p == -1 || x % p == 0; }
    static bool is_unit(T a) { return a == 1 || a == -1; }
};

struct Exact {
    using T = BigInt;
    static T abs(const T& a) { return a < 0 ? T(-a) : a; }
    static T sub_mul(const T& x, const T& q, const T& y) { return x - q * y; }
    static T add(const T& x, const T& y) { return x + y; }
    static T quot(const T& x, const T& y) { return x / y; }
    static bool divides(const T& p, const T& x) { return x % p == 0; }
    static bool is_unit(const T& a) { return a == 1 || a == -1; }
};

// Diagonalizes a (row-major, m x n) in place and returns the absolute pivots in order.
template <class A>
std::vector<typename A::T> diagonalize(std::vector<typename A::T> a, int m, int n) {
    using T = typename A::T;
    auto at = [&](int r, int c) -> T& { return a[static_cast<std::size_t>(r) * n + c]; };
    auto swap_rows = [&](int r1, int r2) {
        if (r1 == r2) return;
        for (int c = 0; c < n; ++c) std::swap(at(r1, c), at(r2, c));
    };
    auto swap_cols = [&](int c1, int c2) {
        if (c1 == c2) return;
        for (int r = 0; r < m; ++r) std::swap(at(r, c1), at(r, c2));
    };

    std::vector<T> diag;
    std::vector<int> nz;
    for (int t = 0; t < m && t < n; ++t) {
        int pr = -1, pc = -1;
        T best = 0;
        for (int r = t; r < m && !(pr >= 0 && A::is_unit(best)); ++r)
            for (int c = t; c < n; ++c) {
                if (at(r, c) == 0) continue;
                T v = A::abs(at(r, c));
                if (pr < 0 || v < best) {
                    best = v;
                    pr = r;
                    pc = c;
                    if (A::is_unit(best)) break;
                }
            }
        if (pr < 0) break;
        swap_rows(t, pr);
        swap_cols(t, pc);

        while (true) {
            const T p = at(t, t);
            bool clean = true;

            nz.clear();
            for (int c = t; c < n; ++c)
                if (at(t, c) != 0) nz.push_back(c);
            for (int r = t + 1; r < m; ++r) {
                if (at(r, t) == 0) continue;
                const T q = A::quot(at(r, t), p);
                if (q != 0)
                    for (int c : nz) at(r, c) = A::sub_mul(at(r, c), q, at(t, c));
                if (at(r, t) != 0) clean = false;
            }

            nz.clear();
            for (int r = t; r < m; ++r)
                if (at(r, t) != 0) nz.push_back(r);
            for (int c = t + 1; c < n; ++c) {
                if (at(t, c) == 0) continue;
                const T q = A::quot(at(t, c), p);
                if (q != 0)
                    for (int r : nz) at(r, c) = A::sub_mul(at(r, c), q, at(r, t));
                if (at(t, c) != 0) clean = false;
            }

            if (!clean) {
                int br = t, bc = t;
                T b = A::abs(at(t, t));
                for (int r = t + 1; r < m; ++r)
                    if (at(r, t) != 0 && A::abs(at(r, t)) < b) b = A::abs(at(r, t)), br = r, bc = t;
                for (int c = t + 1; c < n; ++c)
                    if (at(t, c) != 0 && A::abs(at(t, c)) < b) b = A::abs(at(t, c)), br = t, bc = c;
                swap_rows(t, br);
                swap_cols(t, bc);
                continue;
            }

            if (A::is_unit(p)) break;
            int bad = -1;
            for (int r = t + 1; r < m && bad < 0; ++r)
                for (int c = t + 1; c < n; ++c)
                    if (at(r, c) != 0 && !A::divides(p, at(r, c))) {
                        bad = r;
                        break;
                    }
            if (bad < 0) break;
            for (int c = t; c < n; ++c) at(t, c) = A::add(at(t, c), at(bad, c));
        }
        diag.push_back(A::abs(at(t, t)));
    }
    return diag;
}

SmithForm finish(const std::vector<BigInt>& d, bool escalated) {
    SmithForm s;
    s.diagonal = d;
    s.rank = static_cast<int>(d.size());
    s.escalated = escalated;
    return s;
}

}  // namespace

SmithForm smith_normal_form_exact(const IntegerMatrix& m) {
    std::vector<BigInt> a(m.data().begin(), m.data().end());
    return finish(diagonalize<Exact>(std::move(a), m.rows(), m.cols()), true);
}

SmithForm smith_normal_form(const IntegerMatrix& m) {
    try {
        auto d = diagonalize<Machine>(m.data(), m.rows(), m.cols());
        return finish(std::vector<BigInt>(d.begin(), d.end()), false);
    } catch (const Overflow&) {
        return smith_normal_form_exact(m);
    }
}

IntegerMatrix::IntegerMatrix(std::initializer_list<std::initializer_list<std::int64_t>> rows) {
    rows_ = static_cast<int>(rows.size());
    cols_ = rows_ ? static_cast<int>(rows.begin()->size()) : 0;
    for (const auto& r : rows) {
        if (static_cast<int>(r.size()) != cols_) throw InvalidInput("ragged matrix literal");
        a_.insert(a_.end(), r.begin(), r.end());
    }
}

IntegerMatrix IntegerMatrix::operator*(const IntegerMatrix& o) const {
    if (cols_ != o.rows_) throw InvalidInput("matrix shape mismatch");
    IntegerMatrix p(rows_, o.cols_);
    for (int i = 0; i < rows_; ++i)
        for (int k = 0; k < cols_; ++k) {
            const std::int64_t x = (*this)(i, k);
            if (x == 0) continue;
            for (int j = 0; j < o.cols_; ++j) p(i, j) += x * o(k, j);
        }
    return p;
}

bool IntegerMatrix::is_zero() const {
    for (auto v : a_)
        if (v != 0) return false;
    return true;
}

}  // namespace cutcx
