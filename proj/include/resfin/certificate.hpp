// Membership certificates: explicit cofactors witnessing f = sum g_i * f_i.
//
// Certificates are held (and persisted) in the canonical polynomial text
// format, so the verifier needs nothing beyond parsing and poly_arith. It is
// deliberately independent of the machinery that produced the certificate.
#ifndef RESFIN_CERTIFICATE_HPP
#define RESFIN_CERTIFICATE_HPP

#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "resfin/groebner.hpp"
#include "resfin/polynomial.hpp"

namespace resfin {

struct MembershipCertificate {
    CoefficientDomain domain;         // domain over which the identity is asserted
    std::vector<std::string> vars;
    std::string target;
    std::vector<std::string> generators;
    std::vector<std::string> cofactors;

    std::string to_text() const {
        std::ostringstream out;
        out << "vars:";
        for (const auto& v : vars) out << ' ' << v;
        out << ";\n";
        out << "domain: " << domain.name() << ";\n";
        out << "target:\n" << target << "\n";
        out << "generators: " << generators.size() << "\n";
        for (const auto& g : generators) out << g << "\n";
        out << "cofactors: " << cofactors.size() << "\n";
        for (const auto& c : cofactors) out << c << "\n";
        return out.str();
    }

    void save(const std::string& path) const {
        std::ofstream f(path);
        if (!f) throw Error("cannot write certificate file: " + path);
        f << to_text();
    }

    static MembershipCertificate parse_text(const std::string& text);
    static MembershipCertificate load(const std::string& path) {
        std::ifstream f(path);
        if (!f) throw Error("cannot read certificate file: " + path);
        std::ostringstream ss;
        ss << f.rdbuf();
        return parse_text(ss.str());
    }
};

namespace detail {

inline std::string strip(const std::string& s) {
    std::size_t b = s.find_first_not_of(" \t\r\n");
    if (b == std::string::npos) return "";
    std::size_t e = s.find_last_not_of(" \t\r\n");
    return s.substr(b, e - b + 1);
}

}  // namespace detail

inline MembershipCertificate MembershipCertificate::parse_text(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    MembershipCertificate cert;

    auto next_line = [&](const char* what) {
        while (std::getline(in, line)) {
            line = detail::strip(line);
            if (!line.empty()) return;
        }
        throw Error(std::string("certificate file: missing ") + what);
    };

    next_line("vars header");
    if (line.rfind("vars:", 0) != 0 || line.back() != ';')
        throw Error("certificate file: expected 'vars: ...;'");
    {
        std::istringstream vs(line.substr(5, line.size() - 6));
        std::string v;
        while (vs >> v) cert.vars.push_back(v);
    }
    next_line("domain header");
    if (line.rfind("domain:", 0) != 0 || line.back() != ';')
        throw Error("certificate file: expected 'domain: ...;'");
    cert.domain = CoefficientDomain::parse(detail::strip(line.substr(7, line.size() - 8)));

    next_line("target header");
    if (line != "target:") throw Error("certificate file: expected 'target:'");
    next_line("target polynomial");
    cert.target = line;

    next_line("generators header");
    if (line.rfind("generators:", 0) != 0)
        throw Error("certificate file: expected 'generators: <n>'");
    std::size_t ngens = std::stoul(detail::strip(line.substr(11)));
    for (std::size_t i = 0; i < ngens; ++i) {
        next_line("generator polynomial");
        cert.generators.push_back(line);
    }
    next_line("cofactors header");
    if (line.rfind("cofactors:", 0) != 0)
        throw Error("certificate file: expected 'cofactors: <n>'");
    std::size_t ncof = std::stoul(detail::strip(line.substr(10)));
    for (std::size_t i = 0; i < ncof; ++i) {
        next_line("cofactor polynomial");
        cert.cofactors.push_back(line);
    }
    return cert;
}

// Checks sum g_i * f_i = f by direct arithmetic in the stated domain.
inline bool verify_certificate(const MembershipCertificate& cert) {
    if (cert.generators.size() != cert.cofactors.size()) return false;
    return with_coeff_ring(cert.domain, [&](auto K) {
        using R = decltype(K);
        auto ring = make_poly_ring(K, cert.vars);
        auto target = parse_polynomial<R>(ring, cert.target);
        auto acc = Polynomial<R>::zero(ring);
        for (std::size_t i = 0; i < cert.generators.size(); ++i) {
            auto g = parse_polynomial<R>(ring, cert.generators[i]);
            auto c = parse_polynomial<R>(ring, cert.cofactors[i]);
            acc = poly_arith(acc, poly_arith(c, g, PolyOp::Mul), PolyOp::Add);
        }
        return acc == target;
    });
}

// Builds the textual certificate from typed polynomials.
template <class R>
MembershipCertificate make_certificate(const PolyRingPtr<R>& ring, const Polynomial<R>& target,
                                       const std::vector<Polynomial<R>>& gens,
                                       const std::vector<Polynomial<R>>& cofactors,
                                       CoefficientDomain domain) {
    MembershipCertificate cert;
    cert.domain = domain;
    cert.vars = ring->vars;
    cert.target = target.to_string();
    for (const auto& g : gens) cert.generators.push_back(g.to_string());
    for (const auto& c : cofactors) cert.cofactors.push_back(c.to_string());
    return cert;
}

}  // namespace resfin

#endif
