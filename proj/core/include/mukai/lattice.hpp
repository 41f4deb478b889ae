#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "mukai/matrix.hpp"
#include "mukai/numeric.hpp"

namespace mukai {

/// Integral divisor class: a coordinate vector in a fixed basis of the
/// Neron-Severi group.
class NSClass {
public:
    NSClass() = default;
    explicit NSClass(std::vector<Int> coords) : c_(std::move(coords)) {}

    static NSClass zero(std::size_t rank) { return NSClass(std::vector<Int>(rank, Int(0))); }

    std::size_t size() const { return c_.size(); }
    const Int& operator[](std::size_t i) const { return c_[i]; }
    Int& operator[](std::size_t i) { return c_[i]; }
    const std::vector<Int>& coords() const { return c_; }

    bool is_zero() const {
        for (const Int& x : c_)
            if (x != 0) return false;
        return true;
    }

    friend NSClass operator+(const NSClass& a, const NSClass& b) {
        NSClass r = a;
        for (std::size_t i = 0; i < r.c_.size(); ++i) r.c_[i] += b.c_[i];
        return r;
    }
    friend NSClass operator-(const NSClass& a) {
        NSClass r = a;
        for (Int& x : r.c_) x = -x;
        return r;
    }
    friend NSClass operator*(const Int& s, const NSClass& a) {
        NSClass r = a;
        for (Int& x : r.c_) x *= s;
        return r;
    }
    friend bool operator==(const NSClass& a, const NSClass& b) { return a.c_ == b.c_; }
    friend bool operator!=(const NSClass& a, const NSClass& b) { return !(a == b); }

private:
    std::vector<Int> c_;
};

/// Rational NS class (B-fields, Kaehler classes).
class QClass {
public:
    QClass() = default;
    explicit QClass(std::vector<Rat> coords) : c_(std::move(coords)) {}
    explicit QClass(const NSClass& x) {
        c_.reserve(x.size());
        for (std::size_t i = 0; i < x.size(); ++i) c_.emplace_back(x[i]);
    }

    static QClass zero(std::size_t rank) { return QClass(std::vector<Rat>(rank, Rat(0))); }

    std::size_t size() const { return c_.size(); }
    const Rat& operator[](std::size_t i) const { return c_[i]; }
    Rat& operator[](std::size_t i) { return c_[i]; }
    const std::vector<Rat>& coords() const { return c_; }

    bool is_zero() const {
        for (const Rat& x : c_)
            if (x != 0) return false;
        return true;
    }

    friend QClass operator+(const QClass& a, const QClass& b) {
        QClass r = a;
        for (std::size_t i = 0; i < r.c_.size(); ++i) r.c_[i] += b.c_[i];
        return r;
    }
    friend QClass operator*(const Rat& s, const QClass& a) {
        QClass r = a;
        for (Rat& x : r.c_) x *= s;
        return r;
    }
    friend bool operator==(const QClass& a, const QClass& b) { return a.c_ == b.c_; }
    friend bool operator!=(const QClass& a, const QClass& b) { return !(a == b); }

private:
    std::vector<Rat> c_;
};

/// Even nondegenerate integral bilinear form together with a distinguished
/// polarization inside its positive cone. Immutable after construction;
/// every operation on it is a pure function.
class IntersectionLattice {
public:
    /// Validates: gram square symmetric with even diagonal, nonzero
    /// determinant, ample of matching length with positive square.
    IntersectionLattice(IntMatrix gram, NSClass ample);

    std::size_t rank() const { return gram_.rows(); }
    const IntMatrix& gram() const { return gram_; }
    const NSClass& ample() const { return ample_; }
    const Int& det() const { return det_; }

    /// The bilinear form (x.y). Exact; integer-valued on integral classes.
    Int pair(const NSClass& x, const NSClass& y) const;
    Rat pair(const QClass& x, const QClass& y) const;
    Rat pair(const NSClass& x, const QClass& y) const;
    Rat pair(const QClass& x, const NSClass& y) const { return pair(y, x); }

    /// True iff (w.w) > 0 and (w.ample) > 0, i.e. w lies in the same
    /// component of the positive cone as the stored polarization.
    bool positive_cone(const QClass& w) const;

private:
    void check_len(std::size_t n) const;

    IntMatrix gram_;
    NSClass ample_;
    Int det_;
};

/// True iff the gcd of the coordinates is 1. Rejects the zero vector.
bool is_primitive(const NSClass& x);

struct ContentSplit {
    Int content;       // gcd of coordinates, > 0
    NSClass primitive; // x = content * primitive
};

/// Extracts the content: x = alpha * x0 with x0 primitive. Rejects zero.
ContentSplit content_split(const NSClass& x);

/// Convenience rank-one lattice [[2n]] with the generator as polarization.
IntersectionLattice rank_one_lattice(const Int& two_n);

/// The hyperbolic plane U with gram [[0,1],[1,0]] and the given polarization.
IntersectionLattice hyperbolic_lattice(NSClass ample);

} // namespace mukai
