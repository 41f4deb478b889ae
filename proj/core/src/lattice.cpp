#include "mukai/lattice.hpp"

namespace mukai {

IntersectionLattice::IntersectionLattice(IntMatrix gram, NSClass ample)
    : gram_(std::move(gram)), ample_(std::move(ample)) {
    const std::size_t n = gram_.rows();
    if (n == 0 || gram_.cols() != n)
        throw ValidationError("gram matrix must be square and nonempty");
    for (std::size_t i = 0; i < n; ++i) {
        if (gram_.at(i, i) % 2 != 0)
            throw ValidationError("gram[" + std::to_string(i) + "][" + std::to_string(i) +
                                  "] is odd; the form must be even");
        for (std::size_t j = i + 1; j < n; ++j)
            if (gram_.at(i, j) != gram_.at(j, i))
                throw ValidationError("gram[" + std::to_string(i) + "][" + std::to_string(j) +
                                      "] != gram[" + std::to_string(j) + "][" + std::to_string(i) +
                                      "]; the form must be symmetric");
    }
    det_ = determinant(gram_);
    if (det_ == 0) throw ValidationError("gram matrix is degenerate (zero determinant)");
    if (ample_.size() != n) throw ValidationError("ample class length does not match rank");
    if (pair(ample_, ample_) <= 0)
        throw ValidationError("ample class must have positive square");
}

void IntersectionLattice::check_len(std::size_t n) const {
    if (n != rank())
        throw ValidationError("class length " + std::to_string(n) + " does not match lattice rank " +
                              std::to_string(rank()));
}

Int IntersectionLattice::pair(const NSClass& x, const NSClass& y) const {
    check_len(x.size());
    check_len(y.size());
    Int acc = 0;
    for (std::size_t i = 0; i < rank(); ++i) {
        if (x[i] == 0) continue;
        for (std::size_t j = 0; j < rank(); ++j) acc += x[i] * gram_.at(i, j) * y[j];
    }
    return acc;
}

Rat IntersectionLattice::pair(const QClass& x, const QClass& y) const {
    check_len(x.size());
    check_len(y.size());
    Rat acc = 0;
    for (std::size_t i = 0; i < rank(); ++i) {
        if (x[i] == 0) continue;
        for (std::size_t j = 0; j < rank(); ++j) acc += x[i] * Rat(gram_.at(i, j)) * y[j];
    }
    return acc;
}

Rat IntersectionLattice::pair(const NSClass& x, const QClass& y) const {
    return pair(QClass(x), y);
}

bool IntersectionLattice::positive_cone(const QClass& w) const {
    check_len(w.size());
    return pair(w, w) > 0 && pair(w, QClass(ample_)) > 0;
}

bool is_primitive(const NSClass& x) {
    if (x.is_zero()) throw ValidationError("primitivity is undefined for the zero class");
    return vec_gcd(x.coords()) == 1;
}

ContentSplit content_split(const NSClass& x) {
    if (x.is_zero()) throw ValidationError("content split is undefined for the zero class");
    Int g = vec_gcd(x.coords());
    std::vector<Int> prim;
    prim.reserve(x.size());
    for (const Int& c : x.coords()) prim.push_back(c / g);
    return {g, NSClass(std::move(prim))};
}

IntersectionLattice rank_one_lattice(const Int& two_n) {
    IntMatrix gram(1, 1);
    gram.at(0, 0) = two_n;
    return IntersectionLattice(std::move(gram), NSClass({Int(1)}));
}

IntersectionLattice hyperbolic_lattice(NSClass ample) {
    IntMatrix gram(2, 2);
    gram.at(0, 1) = 1;
    gram.at(1, 0) = 1;
    return IntersectionLattice(std::move(gram), std::move(ample));
}

} // namespace mukai
