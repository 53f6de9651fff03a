#include "qea/latex.hpp"

#include <sstream>

namespace qea {

namespace {

std::string latex_laurent(const LaurentPoly& p) {
    if (p.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int e = p.high(); e >= p.low(); --e) {
        const Rat& c = p.coeff(e);
        if (c == 0) continue;
        Rat ac = abs(c);
        if (first) {
            if (c < 0) os << "-";
            first = false;
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        bool unit = ac == 1 && e != 0;
        if (!unit) {
            if (ac.get_den() == 1)
                os << ac.get_num().get_str();
            else
                os << "\\tfrac{" << ac.get_num().get_str() << "}{" << ac.get_den().get_str() << "}";
        }
        if (e != 0) {
            os << "v";
            if (e != 1) os << "^{" << e << "}";
        }
    }
    return os.str();
}

std::string latex_ratfunc(const RatFunc& f) {
    if (f.is_laurent()) return latex_laurent(f.num());
    return "\\frac{" + latex_laurent(f.num()) + "}{" + latex_laurent(f.den()) + "}";
}

bool is_simple(const LaurentPoly& p) {
    return p.is_zero() || (p.high() == p.low() && (p.leading() == 1 || p.leading() == -1));
}

}  // namespace

std::string latex_scalar(const Scalar& s) {
    if (s.b().is_zero()) return latex_ratfunc(s.a());
    std::string out;
    if (!s.a().is_zero()) out += latex_ratfunc(s.a()) + " + ";
    out += "\\left(" + latex_ratfunc(s.b()) + "\\right) s";
    return out;
}

std::string latex_ncexpr(const NcExpr& x) {
    if (x.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& t : x.terms()) {
        if (!first) os << " + ";
        first = false;
        bool unit_coeff = t.coeff.is_one();
        bool simple = t.coeff.b().is_zero() && t.coeff.a().is_laurent() &&
                      is_simple(t.coeff.a().num());
        if (!unit_coeff) {
            if (simple)
                os << latex_scalar(t.coeff) << " \\, ";
            else
                os << "\\left(" << latex_scalar(t.coeff) << "\\right) ";
        }
        bool any = false;
        // Group equal adjacent letters into powers.
        for (size_t k = 0; k < t.mono.word.size();) {
            size_t kk = k;
            while (kk < t.mono.word.size() && t.mono.word[kk] == t.mono.word[k]) ++kk;
            const Gen& g = t.mono.word[k];
            os << (g.f ? "f" : "e") << "_{" << g.idx + 1 << "}";
            if (kk - k > 1) os << "^{" << kk - k << "}";
            os << " ";
            k = kk;
            any = true;
        }
        for (size_t j = 0; j < t.mono.texp.size(); ++j) {
            if (t.mono.texp[j] == 0) continue;
            os << "t_{" << j + 1 << "}";
            if (t.mono.texp[j] != 1) os << "^{" << t.mono.texp[j].get_str() << "}";
            os << " ";
            any = true;
        }
        if (!any && unit_coeff) os << "1";
    }
    return os.str();
}

std::string latex_lmatrix(const LMatrix& L) {
    std::ostringstream os;
    os << "\\begin{pmatrix}\n";
    for (int a = 0; a < L.n; ++a) {
        for (int b = 0; b < L.n; ++b) {
            os << latex_ncexpr(L.at[a][b]);
            if (b + 1 < L.n) os << " & ";
        }
        os << (a + 1 < L.n ? " \\\\" : "") << "\n";
    }
    os << "\\end{pmatrix}\n";
    return os.str();
}

std::string latex_rmatrix(const RMatrix& R) {
    std::ostringstream os;
    os << "\\begin{aligned}\n";
    for (int row = 0; row < R.n * R.n; ++row)
        for (const auto& [col, v] : R.mat.row(row)) {
            int c = row / R.n + 1, a = row % R.n + 1, d = col / R.n + 1, b = col % R.n + 1;
            os << "R^{" << c << a << "}_{" << d << b << "} &= " << latex_scalar(v) << " \\\\\n";
        }
    os << "\\end{aligned}\n";
    return os.str();
}

std::string latex_spmat(const SpMat& m) {
    std::ostringstream os;
    os << "\\begin{pmatrix}\n";
    for (int r = 0; r < m.dim(); ++r) {
        for (int c = 0; c < m.dim(); ++c) {
            os << latex_scalar(m.at(r, c));
            if (c + 1 < m.dim()) os << " & ";
        }
        os << (r + 1 < m.dim() ? " \\\\" : "") << "\n";
    }
    os << "\\end{pmatrix}\n";
    return os.str();
}

}  // namespace qea
