#include "prime_scope/closure/closure.hpp"

#include <algorithm>

#include "prime_scope/errors.hpp"

namespace prime_scope {

std::string to_string(CertificateKind k)
{
    switch (k) {
    case CertificateKind::Hensel:
        return "hensel";
    case CertificateKind::SlopeObstruction:
        return "slope-obstruction";
    case CertificateKind::Exhausted:
        return "exhausted";
    case CertificateKind::Sturm:
        return "sturm";
    }
    return "sturm";
}

std::vector<Rational> newton_slopes(const PValuation& P, const KPoly& g)
{
    struct Pt {
        long x;
        long y;
    };
    std::vector<Pt> pts;
    for (std::size_t i = 0; i < g.coefficients().size(); ++i) {
        Valuation v = valuation(P, g.coefficients()[i]);
        if (v)
            pts.push_back({static_cast<long>(i), *v});
    }
    // lower convex hull, left to right
    std::vector<Pt> hull;
    for (const Pt& q : pts) {
        while (hull.size() >= 2) {
            const Pt& a = hull[hull.size() - 2];
            const Pt& b = hull.back();
            // drop b if it lies on or above segment a-q
            if ((b.y - a.y) * (q.x - a.x) >= (q.y - a.y) * (b.x - a.x))
                hull.pop_back();
            else
                break;
        }
        hull.push_back(q);
    }
    std::vector<Rational> slopes;
    for (std::size_t i = 1; i < hull.size(); ++i)
        slopes.push_back(make_rational(Integer(hull[i].y - hull[i - 1].y), Integer(hull[i].x - hull[i - 1].x)));
    return slopes;
}

namespace {

void require_monic(const KPoly& g)
{
    if (g.degree() < 1)
        raise(ErrorCode::InvalidArgument, "closure root search needs a nonconstant polynomial");
    if (!g.is_monic())
        raise(ErrorCode::NonMonic, "polynomial " + g.to_string() + " is not monic");
}

struct PadicSetup {
    KPoly s;
    KPoly H;
    KPoly dH;
    long scale_exponent = 0;
    FieldElement scale;
    std::vector<Rational> slopes;
};

PadicSetup setup(const PValuation& P, const KPoly& g)
{
    const FieldPtr& K = g.field();
    PadicSetup st{squarefree_part(g), KPoly(K), KPoly(K), 0, FieldElement(K, 1), {}};
    st.slopes = newton_slopes(P, st.s);
    // roots have valuation -slope; make all of them integral with c = p^j
    Rational top = st.slopes.empty() ? Rational(0) : *std::max_element(st.slopes.begin(), st.slopes.end());
    if (top > 0) {
        Rational need = top / static_cast<long>(P.e());
        Integer j = need.get_num() / need.get_den();
        if (Rational(j) < need)
            j += 1;
        st.scale_exponent = j.get_si();
    }
    st.scale = FieldElement(K, Rational(pow_int(Integer(static_cast<unsigned long>(P.p())),
                                                static_cast<unsigned long>(st.scale_exponent))));
    st.H = scale_roots(st.s, st.scale);
    st.dH = st.H.derivative();
    return st;
}

long val(const PValuation& P, const FieldElement& x, long infinity)
{
    Valuation v = valuation(P, x);
    return v ? *v : infinity;
}

// Representatives of the residue field: sum c_l alpha^l with c_l in [0, p).
std::vector<FieldElement> residue_representatives(const PValuation& P)
{
    const FieldPtr& K = P.field();
    std::vector<FieldElement> out;
    unsigned f = P.f();
    std::vector<long> digits(f, 0);
    long p = static_cast<long>(P.p());
    for (;;) {
        std::vector<Rational> c(static_cast<std::size_t>(K->degree()), Rational(0));
        for (unsigned l = 0; l < f; ++l)
            c[l] = digits[l];
        out.emplace_back(K, c);
        unsigned i = 0;
        while (i < f && ++digits[i] == p) {
            digits[i] = 0;
            ++i;
        }
        if (i == f)
            break;
    }
    return out;
}

} // namespace

RootReport has_root_in_closure(const Prime& P, const KPoly& g, const ClosureOptions& options)
{
    require_monic(g);
    RootReport report{false, squarefree_part(g), {}};
    if (const auto* o = std::get_if<Ordering>(&P)) {
        report.certificate.kind = CertificateKind::Sturm;
        report.certificate.real_root_count = count_real_roots(*o, report.squarefree);
        report.has_root = report.certificate.real_root_count > 0;
        return report;
    }
    const PValuation& v = std::get<PValuation>(P);
    PadicSetup st = setup(v, g);
    RootCertificate& cert = report.certificate;
    cert.slopes = st.slopes;
    cert.scale_exponent = st.scale_exponent;
    const FieldPtr& K = g.field();
    if (st.s.coeff(0).is_zero()) {
        // zero is a root; it has no finite slope
        cert.kind = CertificateKind::Hensel;
        cert.residue = FieldElement(K, 0);
        cert.value_valuation = -1;
        cert.derivative_valuation = val(v, st.dH(FieldElement(K, 0)), 0);
        report.has_root = true;
        return report;
    }
    bool any_integral = false;
    for (const Rational& s : st.slopes)
        any_integral = any_integral || s.get_den() == 1;
    if (!any_integral) {
        cert.kind = CertificateKind::SlopeObstruction;
        return report;
    }
    long D = st.H.degree() == 1 ? 0 : valuation_of_nonzero(v, discriminant(st.H));
    cert.discriminant_valuation = D;
    long depth = 2 * D + 1;
    std::vector<FieldElement> reps = residue_representatives(v);
    std::vector<FieldElement> classes{FieldElement(K, 0)};
    FieldElement pik(K, 1); // pi^k
    constexpr long kInfinite = -1;
    for (long k = 0;; ++k) {
        for (const FieldElement& y : classes) {
            ++cert.classes_examined;
            FieldElement hy = st.H(y);
            long vd = val(v, st.dH(y), 1L << 40);
            if (hy.is_zero() || val(v, hy, 0) > 2 * vd) {
                cert.kind = CertificateKind::Hensel;
                cert.residue = y;
                cert.precision = k;
                cert.value_valuation = hy.is_zero() ? kInfinite : val(v, hy, 0);
                cert.derivative_valuation = vd;
                report.has_root = true;
                return report;
            }
        }
        if (k >= depth)
            break;
        std::vector<FieldElement> next;
        for (const FieldElement& y : classes) {
            for (const FieldElement& r : reps) {
                FieldElement child = y + r * pik;
                FieldElement hc = st.H(child);
                if (hc.is_zero() || valuation_of_nonzero(v, hc) >= k + 1)
                    next.push_back(child);
            }
            if (next.size() > options.class_cap)
                raise(ErrorCode::Unsupported, "residue search exceeds the class cap of "
                                                  + std::to_string(options.class_cap));
        }
        classes = std::move(next);
        pik = pik * v.uniformizer();
        if (classes.empty())
            break;
    }
    cert.kind = CertificateKind::Exhausted;
    cert.depth = depth;
    return report;
}

FieldElement padic_root(const PValuation& P, const KPoly& g, long k, const ClosureOptions& options)
{
    require_monic(g);
    RootReport report = has_root_in_closure(Prime(P), g, options);
    if (!report.has_root)
        raise(ErrorCode::NoRoot, "polynomial " + g.to_string() + " has no root in the closure");
    PadicSetup st = setup(P, g);
    const long e = static_cast<long>(P.e());
    FieldElement cinv = nf_inv(st.scale);
    auto good = [&](const FieldElement& y) {
        FieldElement gx = g(y * cinv);
        return gx.is_zero() || valuation_of_nonzero(P, gx) >= k;
    };
    FieldElement y = *report.certificate.residue;
    // Newton iteration on H; truncation keeps heights bounded without
    // losing the distance to the root
    while (!good(y)) {
        FieldElement hy = st.H(y);
        if (hy.is_zero())
            break;
        FieldElement step = hy / st.dH(y);
        y = y - step;
        FieldElement hy2 = st.H(y);
        if (hy2.is_zero())
            break;
        long dist = valuation_of_nonzero(P, hy2) - valuation_of_nonzero(P, st.dH(y));
        long level = dist / e + 2;
        if (level > static_cast<long>(options.precision_cap))
            raise(ErrorCode::PrecisionOverflow, "Newton iteration exceeds the precision cap");
        y = truncate(P, y, static_cast<unsigned>(level));
    }
    for (unsigned j = 0;; ++j) {
        if (j > options.precision_cap)
            raise(ErrorCode::PrecisionOverflow, "root truncation exceeds the precision cap");
        FieldElement yj = truncate(P, y, j);
        if (good(yj))
            return yj * cinv;
    }
}

} // namespace prime_scope
