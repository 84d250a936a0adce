#pragma once

#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>

#include "plk/pair_index.hpp"

namespace plk {

enum class VarKind : std::uint8_t { Pair, AuxX, AuxY };

/// A ring variable: either a pair variable p[i,j] (1 <= i < j) or one of the
/// auxiliary coordinates x[i], y[i] the pair variables map onto.
class Variable {
public:
    static Variable pair(PairIndex p) { return Variable(VarKind::Pair, p.i, p.j); }
    static Variable pair(int i, int j) { return Variable(VarKind::Pair, PairIndex(i, j).i, j); }
    static Variable aux_x(int i) { return Variable(VarKind::AuxX, check_aux(i), 0); }
    static Variable aux_y(int i) { return Variable(VarKind::AuxY, check_aux(i), 0); }

    VarKind kind() const { return kind_; }
    bool is_pair() const { return kind_ == VarKind::Pair; }
    int i() const { return i_; }
    int j() const { return j_; }
    PairIndex pair_index() const {
        if (!is_pair()) throw std::logic_error("Variable: not a pair variable");
        return PairIndex(i_, j_);
    }

    /// Compact integer id; pair variables sort before x's before y's, each
    /// family in index order. Used for canonical storage and fast rank lookup.
    int id() const {
        switch (kind_) {
            case VarKind::Pair: return (i_ << 7) | j_;
            case VarKind::AuxX: return (1 << 14) + i_;
            default: return (2 << 14) + i_;
        }
    }

    std::string str() const {
        switch (kind_) {
            case VarKind::Pair:
                return "p[" + std::to_string(i_) + "," + std::to_string(j_) + "]";
            case VarKind::AuxX: return "x[" + std::to_string(i_) + "]";
            default: return "y[" + std::to_string(i_) + "]";
        }
    }

    friend bool operator==(const Variable& a, const Variable& b) {
        return a.kind_ == b.kind_ && a.i_ == b.i_ && a.j_ == b.j_;
    }
    friend bool operator!=(const Variable& a, const Variable& b) { return !(a == b); }
    friend bool operator<(const Variable& a, const Variable& b) { return a.id() < b.id(); }

private:
    Variable(VarKind kind, int i, int j) : kind_(kind), i_(i), j_(j) {
        if (kind == VarKind::Pair && j >= 128)
            throw std::invalid_argument("Variable: pair index out of range");
    }
    static int check_aux(int i) {
        if (i < 1 || i >= (1 << 14)) throw std::invalid_argument("Variable: aux index out of range");
        return i;
    }

    VarKind kind_;
    int i_, j_;
};

}  // namespace plk
