#ifndef QLAB_EXPR_HPP
#define QLAB_EXPR_HPP

#include <algorithm>
#include <memory>
#include <set>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "qlab/error.hpp"
#include "qlab/rational.hpp"

namespace qlab {

/// Expression tree over symbols and rational constants: +, -, *, /, integer
/// powers, square roots, n-th roots, plus sign slots marking positions where a
/// catalog source prints no usable sign (resolved by the verifier).
/// Nodes are immutable and shared; Expr is a cheap value handle.
class Expr {
public:
    enum class Kind { Const, Sym, Add, Sub, Mul, Div, PowInt, Sqrt, NthRoot, SignSlot };

    struct Node {
        Kind kind;
        Rational cval;          // Const
        std::string sym;        // Sym
        long ival = 0;          // PowInt / NthRoot exponent, SignSlot index
        std::vector<Expr> kids;
    };

    Expr() = default;

    static Expr constant(Rational c) {
        return make({Kind::Const, std::move(c), "", 0, {}});
    }
    static Expr constant(long c) { return constant(Rational(c)); }
    static Expr symbol(std::string name) {
        return make({Kind::Sym, Rational(0), std::move(name), 0, {}});
    }

    bool valid() const { return static_cast<bool>(n_); }
    const Node& node() const { return *n_; }
    Kind kind() const { return n_->kind; }

    friend Expr operator+(const Expr& a, const Expr& b) { return make({Kind::Add, Rational(0), "", 0, {a, b}}); }
    friend Expr operator-(const Expr& a, const Expr& b) { return make({Kind::Sub, Rational(0), "", 0, {a, b}}); }
    friend Expr operator*(const Expr& a, const Expr& b) { return make({Kind::Mul, Rational(0), "", 0, {a, b}}); }
    friend Expr operator/(const Expr& a, const Expr& b) { return make({Kind::Div, Rational(0), "", 0, {a, b}}); }

    friend Expr pow(const Expr& a, long n) { return make({Kind::PowInt, Rational(0), "", n, {a}}); }
    friend Expr sqrt(const Expr& a) { return make({Kind::Sqrt, Rational(0), "", 0, {a}}); }
    friend Expr nth_root(const Expr& a, long n) {
        if (n < 1) throw error("nth_root: index must be positive");
        return make({Kind::NthRoot, Rational(0), "", n, {a}});
    }
    /// +-a with the sign taken from slot `idx` of the resolution assignment.
    friend Expr sign_slot(long idx, const Expr& a) {
        return make({Kind::SignSlot, Rational(0), "", idx, {a}});
    }

    /// All symbol names referenced anywhere in the tree.
    void collect_symbols(std::set<std::string>& out) const {
        if (n_->kind == Kind::Sym) out.insert(n_->sym);
        for (const auto& k : n_->kids) k.collect_symbols(out);
    }
    /// Highest slot index + 1 (0 when the tree has no slots).
    long slot_count() const {
        long m = 0;
        if (n_->kind == Kind::SignSlot) m = n_->ival + 1;
        for (const auto& k : n_->kids) m = std::max(m, k.slot_count());
        return m;
    }
    bool contains_kind(Kind k) const {
        if (n_->kind == k) return true;
        for (const auto& c : n_->kids)
            if (c.contains_kind(k)) return true;
        return false;
    }
    long count_consts() const {
        long c = (n_->kind == Kind::Const) ? 1 : 0;
        for (const auto& k : n_->kids) c += k.count_consts();
        return c;
    }
    /// Rebuilds the tree with `delta` added to the idx-th constant in preorder.
    Expr perturb_const(long idx, const Rational& delta) const {
        long cursor = 0;
        return perturb_walk(idx, delta, cursor);
    }

    std::string str() const {
        std::ostringstream os;
        print(os);
        return os.str();
    }

private:
    static Expr make(Node n) {
        Expr e;
        e.n_ = std::make_shared<const Node>(std::move(n));
        return e;
    }

    Expr perturb_walk(long idx, const Rational& delta, long& cursor) const {
        if (n_->kind == Kind::Const) {
            if (cursor++ == idx) return constant(n_->cval + delta);
            return *this;
        }
        Node copy = *n_;
        for (auto& k : copy.kids) k = k.perturb_walk(idx, delta, cursor);
        return make(std::move(copy));
    }

    void print(std::ostringstream& os) const {
        switch (n_->kind) {
            case Kind::Const: os << n_->cval.str(); return;
            case Kind::Sym: os << n_->sym; return;
            case Kind::Add: os << "("; n_->kids[0].print(os); os << " + "; n_->kids[1].print(os); os << ")"; return;
            case Kind::Sub: os << "("; n_->kids[0].print(os); os << " - "; n_->kids[1].print(os); os << ")"; return;
            case Kind::Mul: os << "("; n_->kids[0].print(os); os << "*"; n_->kids[1].print(os); os << ")"; return;
            case Kind::Div: os << "("; n_->kids[0].print(os); os << "/"; n_->kids[1].print(os); os << ")"; return;
            case Kind::PowInt: n_->kids[0].print(os); os << "^" << n_->ival; return;
            case Kind::Sqrt: os << "sqrt("; n_->kids[0].print(os); os << ")"; return;
            case Kind::NthRoot: os << "root" << n_->ival << "("; n_->kids[0].print(os); os << ")"; return;
            case Kind::SignSlot: os << "[+-]"; n_->kids[0].print(os); return;
        }
    }

    std::shared_ptr<const Node> n_;
};

inline Expr lit(long c) { return Expr::constant(c); }
inline Expr lit(const Rational& c) { return Expr::constant(c); }
inline Expr sym(const std::string& s) { return Expr::symbol(s); }

inline Expr operator+(const Expr& a, long b) { return a + lit(b); }
inline Expr operator+(long a, const Expr& b) { return lit(a) + b; }
inline Expr operator-(const Expr& a, long b) { return a - lit(b); }
inline Expr operator-(long a, const Expr& b) { return lit(a) - b; }
inline Expr operator*(long a, const Expr& b) { return lit(a) * b; }
inline Expr operator*(const Expr& a, long b) { return a * lit(b); }
inline Expr operator/(long a, const Expr& b) { return lit(a) / b; }
inline Expr operator/(const Expr& a, long b) { return a / lit(b); }

} // namespace qlab

#endif
