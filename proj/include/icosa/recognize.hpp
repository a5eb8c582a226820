#pragma once

#include "icosa/gmodule.hpp"

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace icosa {

enum class Regime { prime_characteristic, divisible, effective, outside };

std::string regime_name(Regime r, std::int64_t characteristic);

struct NormalizerCheck {
    Perm representative;
    std::string status; // "pass" | "fail" | "skipped"
    std::string reason; // set when skipped or failed
};

struct HypothesisReport {
    bool group_is_alt5 = false;
    bool faithful = false;
    bool two_is_unit = false;
    Regime regime = Regime::outside;
    std::int64_t characteristic = 0;
    std::vector<NormalizerCheck> normalizer_checks;
    std::vector<std::string> warnings;

    bool normalizers_pass() const;
    bool ok() const; // hard requirements; effective/outside regimes only warn
};

/// Checks the recognition hypotheses: the group is Alt(5) acting faithfully,
/// 2 is a unit, and for each class representative g with |g| a unit,
/// tr_a tr_g = 0 for every a in N(<g>) \ <g>.
HypothesisReport check_hypotheses(const GModule& m);

struct CheckLedger {
    std::vector<std::pair<std::string, bool>> entries;
    void add(const std::string& name, bool ok) { entries.emplace_back(name, ok); }
    bool all() const;
};

/// The class-sum scalars: c2 = -5, c3 = 0, c5 = 4, and both 5-classes
/// satisfying x^2 = 4(x + 4), as matrix identities.
CheckLedger verify_class_scalars(const GModule& m);

/// The local identities on C_alpha, with E1 == E2 meaning
/// E1 tr_alpha = E2 tr_alpha: writing s1 = alpha gamma, s2 = gamma alpha,
/// phi^ = s1 + s2, u = s1^2 alpha + s2^2 alpha, r = s2^-1 s1 + s1^-1 s2,
/// the seven checks are c51 == 2(phi^+u+r), phi^2 == u+phi^, u+phi^ == 2+r,
/// u phi^ == phi^ u, phi^ u == u+r, u == 1, 4 phi^ == c51.
CheckLedger verify_local_equations(const GModule& m, const Perm& alpha,
                                   const Perm& gamma);

/// L = image of tr_alpha together with the action of (1/4) * (class sum) in
/// L coordinates; verifies phi maps L to L and phi^2 = phi + 1 on L.
std::pair<Submodule, Mat> extract_L_phi(const GModule& m, const Perm& alpha,
                                        const std::vector<Perm>& phi_class);

/// The base-change matrix with columns rho(gamma^-i) l_j, (i, j) lexicographic;
/// verifies invertibility and equivariance for alpha and gamma against the
/// icosahedral model built blockwise from phi_on_L.
Mat build_isomorphism(const GModule& m, const Perm& alpha, const Perm& gamma,
                      const Submodule& L, const Mat& phi_on_L);

/// rho_model(g) on the (i, j) basis for g in {alpha, gamma}.
Mat icosa_model_matrix(const Ring& ring, const Mat& phi_on_L, bool for_alpha);

struct RecognitionCertificate {
    std::string status; // "icosahedral" or "failed at <stage>"
    std::optional<std::string> reason;
    Perm alpha, gamma;
    std::string class_label; // "C51" | "C52"
    std::optional<Submodule> L;
    std::optional<Mat> phi_on_L;
    std::optional<Mat> iso;
    CheckLedger checks;
    HypothesisReport hypotheses;
    std::optional<std::uint64_t> scramble_seed;

    bool icosahedral() const { return status == "icosahedral"; }
};

RecognitionCertificate recognize(const GModule& m,
                                 ClassChoice choice = ClassChoice::c51,
                                 std::optional<std::uint64_t> scramble_seed = std::nullopt);

struct CertificateVerification {
    bool ok = false;
    std::vector<std::string> failures;
};

/// Re-derives every matrix identity of a certificate from the serialized
/// data and the module alone; independent of the recognition path.
CertificateVerification verify_certificate(const GModule& m,
                                           const RecognitionCertificate& cert);

} // namespace icosa
