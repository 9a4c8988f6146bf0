#ifndef LAF_MIXTURE_HPP
#define LAF_MIXTURE_HPP

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace laf {

// One labelled isotropic Gaussian concept.
struct MixtureComponent {
    std::string label;        // lowercase single word, e.g. "bus"
    std::vector<double> mean; // length == model dimension
    double variance = 1.0;    // > 0, shared across coordinates
    double weight = 1.0;      // > 0; weights sum to 1
};

// Analytic stand-in for a learned denoiser: a Gaussian mixture over clean
// data whose noised marginals (and therefore exact noise predictions) are
// available in closed form. Under the forward process z = sqrt(ab) x +
// sqrt(1-ab) noise, each component contributes N(sqrt(ab) mu, s^2 I) with
// s^2 = ab * var + (1 - ab), and
//   eps_k(z)      = sqrt(1-ab) * (z - sqrt(ab) mu_k) / s_k^2
//   eps_uncond(z) = sum_k r_k(z, ab) * eps_k(z)
// where r are the posterior component responsibilities at noise level ab.
class ScoreModel {
public:
    ScoreModel(int dimension, std::vector<MixtureComponent> components);

    static ScoreModel from_json_text(std::string_view text,
                                     const std::string& origin = "<json>");
    static ScoreModel from_json_file(const std::string& path);
    std::string to_json_string(int indent = 2) const;

    int dimension() const { return dimension_; }
    const std::vector<MixtureComponent>& components() const {
        return components_;
    }

    // Exact label lookup; throws ConceptUnknown.
    std::size_t component_index(std::string_view label) const;

    // Resolves a chunk phrase ("red car") against component labels: a label
    // matches when it equals one of the phrase's lowercased words. Exactly
    // one component may match; otherwise ConceptUnknown / ConceptAmbiguous.
    std::size_t match_phrase(std::string_view phrase) const;

    // Exact noise prediction at noise level alpha_bar in (0, 1]; conditioned
    // on one component, or the mixture posterior blend when absent.
    std::vector<double> epsilon(std::span<const double> z, double alpha_bar,
                                std::optional<std::size_t> component) const;

    // Clean-data (alpha_bar = 1) mixture log density and responsibilities.
    double log_density(std::span<const double> z) const;
    std::vector<double> responsibilities(std::span<const double> z) const;

private:
    void check_dim(std::span<const double> z) const;

    int dimension_ = 0;
    std::vector<MixtureComponent> components_;
};

} // namespace laf

#endif
