#include "pvg/dvariety.hpp"

#include <sstream>

#include "pvg/errors.hpp"

namespace pvg {

namespace {

const RatFunc kZeroRf;

void trim_w(std::vector<RatFunc>& row) {
    while (!row.empty() && row.back().is_zero()) row.pop_back();
}

// univariate division in w over the rational function field
void divrem_w(const std::vector<RatFunc>& num, const std::vector<RatFunc>& den,
              std::vector<RatFunc>& q, std::vector<RatFunc>& r) {
    if (den.empty()) throw ZeroPolynomial();
    r = num;
    trim_w(r);
    q.assign(r.size() >= den.size() ? r.size() - den.size() + 1 : 0, RatFunc());
    while (r.size() >= den.size()) {
        const std::size_t shift = r.size() - den.size();
        const RatFunc factor = r.back() / den.back();
        q[shift] = factor;
        for (std::size_t i = 0; i < den.size(); ++i)
            r[shift + i] -= factor * den[i];
        r.pop_back();
        trim_w(r);
    }
}

} // namespace

void BiPoly::trim() {
    for (auto& row : c_) trim_w(row);
    while (!c_.empty() && c_.back().empty()) c_.pop_back();
}

BiPoly BiPoly::constant(RatFunc c) { return term(0, 0, std::move(c)); }

BiPoly BiPoly::y() { return term(1, 0, RatFunc(Poly(1))); }

BiPoly BiPoly::w() { return term(0, 1, RatFunc(Poly(1))); }

BiPoly BiPoly::term(int ydeg, int wdeg, RatFunc coeff) {
    if (ydeg < 0 || wdeg < 0) throw ZeroInput("negative exponent in a term");
    BiPoly out;
    if (coeff.is_zero()) return out;
    out.c_.resize(static_cast<std::size_t>(ydeg) + 1);
    out.c_[static_cast<std::size_t>(ydeg)].resize(static_cast<std::size_t>(wdeg) + 1);
    out.c_[static_cast<std::size_t>(ydeg)][static_cast<std::size_t>(wdeg)] =
        std::move(coeff);
    return out;
}

int BiPoly::wdeg() const {
    int d = -1;
    for (const auto& row : c_)
        d = std::max(d, static_cast<int>(row.size()) - 1);
    return d;
}

const RatFunc& BiPoly::at(int i, int j) const {
    if (i < 0 || j < 0) return kZeroRf;
    const auto iu = static_cast<std::size_t>(i);
    const auto ju = static_cast<std::size_t>(j);
    if (iu >= c_.size() || ju >= c_[iu].size()) return kZeroRf;
    return c_[iu][ju];
}

std::vector<RatFunc> BiPoly::ycoeff(int i) const {
    if (i < 0 || static_cast<std::size_t>(i) >= c_.size()) return {};
    return c_[static_cast<std::size_t>(i)];
}

BiPoly BiPoly::operator+(const BiPoly& o) const {
    BiPoly out;
    out.c_.resize(std::max(c_.size(), o.c_.size()));
    for (std::size_t i = 0; i < out.c_.size(); ++i) {
        const std::size_t wa = i < c_.size() ? c_[i].size() : 0;
        const std::size_t wb = i < o.c_.size() ? o.c_[i].size() : 0;
        out.c_[i].resize(std::max(wa, wb));
        for (std::size_t j = 0; j < out.c_[i].size(); ++j) {
            if (j < wa) out.c_[i][j] += c_[i][j];
            if (j < wb) out.c_[i][j] += o.c_[i][j];
        }
    }
    out.trim();
    return out;
}

BiPoly BiPoly::operator-() const {
    BiPoly out = *this;
    for (auto& row : out.c_)
        for (auto& v : row) v = -v;
    return out;
}

BiPoly BiPoly::operator-(const BiPoly& o) const { return *this + (-o); }

BiPoly BiPoly::operator*(const BiPoly& o) const {
    BiPoly out;
    if (is_zero() || o.is_zero()) return out;
    out.c_.resize(c_.size() + o.c_.size() - 1);
    for (std::size_t i = 0; i < c_.size(); ++i)
        for (std::size_t j = 0; j < c_[i].size(); ++j) {
            if (c_[i][j].is_zero()) continue;
            for (std::size_t k = 0; k < o.c_.size(); ++k)
                for (std::size_t l = 0; l < o.c_[k].size(); ++l) {
                    if (o.c_[k][l].is_zero()) continue;
                    auto& row = out.c_[i + k];
                    if (row.size() < j + l + 1) row.resize(j + l + 1);
                    row[j + l] += c_[i][j] * o.c_[k][l];
                }
        }
    out.trim();
    return out;
}

BiPoly BiPoly::scaled(const RatFunc& s) const {
    BiPoly out;
    if (s.is_zero()) return out;
    out.c_ = c_;
    for (auto& row : out.c_)
        for (auto& v : row) v *= s;
    out.trim();
    return out;
}

bool BiPoly::is_y_monic() const {
    if (is_zero()) return false;
    const auto& lead = c_.back();
    return lead.size() == 1 && lead[0].is_one();
}

void BiPoly::divrem_y(const BiPoly& num, const BiPoly& den, BiPoly& q, BiPoly& r) {
    if (den.is_zero()) throw ZeroPolynomial();
    if (den.ydeg() == 0) {
        // y-free divisor: divide every y-row in w
        const std::vector<RatFunc> d = den.ycoeff(0);
        q = BiPoly();
        r = BiPoly();
        for (int i = 0; i <= num.ydeg(); ++i) {
            std::vector<RatFunc> qr, rr;
            divrem_w(num.ycoeff(i), d, qr, rr);
            for (std::size_t j = 0; j < qr.size(); ++j)
                q = q + term(i, static_cast<int>(j), qr[j]);
            for (std::size_t j = 0; j < rr.size(); ++j)
                r = r + term(i, static_cast<int>(j), rr[j]);
        }
        return;
    }
    if (!den.is_y_monic())
        throw ShapeMismatch("division requires a y-monic divisor");
    q = BiPoly();
    r = num;
    const int dd = den.ydeg();
    while (!r.is_zero() && r.ydeg() >= dd) {
        const int shift = r.ydeg() - dd;
        BiPoly lead;
        const std::vector<RatFunc> top = r.ycoeff(r.ydeg());
        for (std::size_t j = 0; j < top.size(); ++j)
            lead = lead + term(shift, static_cast<int>(j), top[j]);
        q = q + lead;
        r = r - den * lead;
    }
}

std::string BiPoly::str() const {
    if (is_zero()) return "0";
    std::ostringstream out;
    bool first = true;
    for (int i = ydeg(); i >= 0; --i) {
        const std::vector<RatFunc> row = ycoeff(i);
        for (int j = static_cast<int>(row.size()) - 1; j >= 0; --j) {
            const RatFunc& coeff = row[static_cast<std::size_t>(j)];
            if (coeff.is_zero()) continue;
            std::string cs = coeff.str();
            bool negative = false;
            if (!cs.empty() && cs[0] == '-') {
                negative = true;
                cs = cs.substr(1);
            }
            if (first) {
                if (negative) out << "-";
                first = false;
            } else {
                out << (negative ? " - " : " + ");
            }
            if (cs.find(' ') != std::string::npos) cs = "(" + cs + ")";
            std::vector<std::string> factors;
            if (cs != "1" || (i == 0 && j == 0)) factors.push_back(cs);
            if (i > 0) factors.push_back(i == 1 ? "y" : "y^" + std::to_string(i));
            if (j > 0) factors.push_back(j == 1 ? "w" : "w^" + std::to_string(j));
            for (std::size_t k = 0; k < factors.size(); ++k) {
                if (k) out << "*";
                out << factors[k];
            }
        }
    }
    return out.str();
}

BiPoly total_derivative(const BiPoly& p, const RatFunc& a) {
    BiPoly out;
    for (int i = 0; i <= p.ydeg(); ++i) {
        const std::vector<RatFunc> row = p.ycoeff(i);
        for (std::size_t j = 0; j < row.size(); ++j) {
            if (row[j].is_zero()) continue;
            const RatFunc d = row[j].derivative() + a * row[j] * RatFunc(Poly(i));
            out = out + BiPoly::term(i, static_cast<int>(j), d);
        }
    }
    return out;
}

BiPoly total_derivative(const LiftedRelation& lift) {
    return total_derivative(lift.relation, lift.a);
}

DInvariance is_d_invariant(const LiftedRelation& lift) {
    if (lift.relation.is_zero()) throw ZeroInput("the lifted relation is zero");
    DInvariance out;
    const BiPoly d = total_derivative(lift);
    BiPoly::divrem_y(d, lift.relation, out.quotient, out.remainder);
    out.invariant = out.remainder.is_zero();
    if (!out.invariant) out.quotient = BiPoly();
    return out;
}

LiftedRelation minimal_lift_rank_one(const RankOneClassification& cl) {
    const Kummer* k = std::get_if<Kummer>(&cl);
    if (!k) throw NotKummer();
    LiftedRelation lift;
    lift.relation = BiPoly::term(static_cast<int>(k->n), 0, RatFunc(Poly(1))) -
                    BiPoly::term(0, 1, k->f);
    lift.a = k->f.log_derivative() / RatFunc(Poly(k->n));
    const DInvariance check = is_d_invariant(lift);
    if (!check.invariant)
        throw InternalError("minimal lift failed its derivation check");
    return lift;
}

namespace {

// Extract (n, f) from the shape y^n - w*f; ShapeMismatch otherwise.
std::pair<long, RatFunc> lift_shape(const BiPoly& p) {
    const int n = p.ydeg();
    if (n < 1 || !p.is_y_monic())
        throw ShapeMismatch("relation is not of the form y^n - w*f");
    const RatFunc f = -p.at(0, 1);
    BiPoly expect = BiPoly::term(n, 0, RatFunc(Poly(1))) - BiPoly::term(0, 1, f);
    if (p != expect || f.is_zero())
        throw ShapeMismatch("relation is not of the form y^n - w*f");
    return {n, f};
}

} // namespace

Disjointness disjoint_lifts(const LiftedRelation& l1, const RealAlgebraic& c1,
                            const LiftedRelation& l2, const RealAlgebraic& c2) {
    const auto [n1, f1] = lift_shape(l1.relation);
    const auto [n2, f2] = lift_shape(l2.relation);
    if (n1 != n2 || !(f1 == f2) || !(l1.a == l2.a))
        throw ShapeMismatch("the two lifts specialize different relations");
    Disjointness out;
    out.n = n1;
    out.f = f1;
    out.scalar_part = (c1 - c2).pow(n1);
    out.function_part = f1.pow(n1);
    out.disjoint = !out.scalar_part.is_zero();
    return out;
}

} // namespace pvg
