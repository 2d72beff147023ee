// Farthest-distance functions: certify one, recover its set, apply f_R, and
// show that a quadratic is rejected.

#include "ballhull/ballhull.hpp"

#include <iostream>

using namespace ballhull;

int main()
{
    const NormSpec l2 = NormSpec::euclidean(2);
    const Box box = Box::cube(2, -3.0, 3.0);
    const double h = 0.05;

    const PointSet C({{-0.4, 0.0}, {0.4, 0.1}, {0.0, 0.5}});
    const GridFunction f = farthest_field(SetOracle(C, l2), box, h);
    const FarthestCertificate cert = certify_farthest(f, 50, 1, 2000);
    std::cout << "F_C certified: " << (cert.certified() ? "yes" : "no") << " (roundtrip " << cert.roundtrip_error
              << " <= " << cert.roundtrip_tol << ")\n";

    const SetOracle G = gamma_recover(f);
    std::cout << "Gamma_f extreme points:";
    for (std::size_t i = 0; i < G.sample()->extremes.size(); ++i) {
        const VecView p = G.sample()->extremes[i];
        std::cout << " (" << p[0] << ", " << p[1] << ")";
    }
    std::cout << "\n";

    const double R = 1.0;
    const GridFunction fR = transform_fR(f, R);
    const GridFunction fP = farthest_field(SetOracle(BallRegion(C, R, l2)), box, h);
    double gap = 0.0;
    for (std::size_t i = 0; i < fR.size(); ++i) gap = std::max(gap, std::abs(fR.value(i) - fP.value(i)));
    std::cout << "sup |f_R - F_polar| = " << gap << "\n";

    const GridFunction q = GridFunction::sample(box, h, l2, [](VecView x) { return 0.5 * dot(x, x); });
    const FarthestCertificate qc = certify_farthest(q, 50, 1, 2000);
    std::cout << "half |x|^2 certified: " << (qc.certified() ? "yes" : "no") << " (" << qc.cond_a.certified << "/"
              << qc.cond_a.estimates.size() << " probes pass condition (a))\n";
}
