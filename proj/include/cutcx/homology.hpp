#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "cutcx/complex.hpp"

namespace cutcx {

using BigInt = boost::multiprecision::cpp_int;

class IntegerMatrix {
public:
    IntegerMatrix() = default;
    IntegerMatrix(int rows, int cols) : rows_(rows), cols_(cols), a_(static_cast<std::size_t>(rows) * cols, 0) {}
    IntegerMatrix(std::initializer_list<std::initializer_list<std::int64_t>> rows);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    std::int64_t& operator()(int r, int c) { return a_[static_cast<std::size_t>(r) * cols_ + c]; }
    std::int64_t operator()(int r, int c) const { return a_[static_cast<std::size_t>(r) * cols_ + c]; }
    const std::vector<std::int64_t>& data() const { return a_; }

    IntegerMatrix operator*(const IntegerMatrix& o) const;
    bool is_zero() const;
    bool operator==(const IntegerMatrix& o) const = default;

private:
    int rows_ = 0;
    int cols_ = 0;
    std::vector<std::int64_t> a_;
};

struct SmithForm {
    // Nonzero invariant factors d_1 | d_2 | ... ; the remaining diagonal entries are zero.
    std::vector<BigInt> diagonal;
    int rank = 0;
    bool escalated = false;
};
SmithForm smith_normal_form(const IntegerMatrix& m);

// Same reduction carried out directly in arbitrary precision.
SmithForm smith_normal_form_exact(const IntegerMatrix& m);

// Matrix i is the boundary map from faces of dimension i to faces of dimension i-1,
// for i = 0 .. dim; rows and columns follow faces_by_size() order.
std::vector<IntegerMatrix> boundary_matrices(const SimplicialComplex& c);

struct HomologyGroup {
    int dim = 0;
    std::int64_t rank = 0;
    std::vector<BigInt> torsion;
};

struct HomologyReport {
    // One entry per dimension -1 .. dim.
    std::vector<HomologyGroup> groups;

    std::int64_t betti(int d) const;
    bool is_free() const;
    std::int64_t euler() const;
    std::int64_t total_rank() const;
    // Dimensions with nonzero rank or torsion.
    std::vector<int> support() const;
};
HomologyReport reduced_homology(const SimplicialComplex& c);

}  // namespace cutcx
