#pragma once

#include <string>
#include <vector>

#include "arsite/correspondence.hpp"
#include "arsite/hereditary.hpp"
#include "arsite/newton.hpp"
#include "arsite/semiring.hpp"
#include "arsite/tropical.hpp"

namespace arsite {

SemiringInstance<Boolean> boolean_instance();
SemiringInstance<NBar> nbar_instance();
SemiringInstance<ZMax> zmax_instance();
SemiringInstance<QMax> qmax_instance();
SemiringInstance<HereditarySet> hereditary_instance();
SemiringInstance<NewtonPolygon> newton_instance();
SemiringInstance<GermElement> germ_instance(GermMode mode = GermMode::two_sided);
SemiringInstance<CorrespondenceElement> correspondence_instance(const Lambda& lambda);

/// B, NBar, Zmax, Qmax, Sub, Conv, NBar_eps, R(1/3), R(2), R(5/7), R(sqrt:2).
std::vector<std::string> standard_instance_names();
/// Throws std::invalid_argument for an unknown name.
AxiomReport run_standard_instance(const std::string& name, std::size_t iterations, std::uint64_t seed);
std::vector<AxiomReport> run_standard_suites(std::size_t iterations, std::uint64_t seed);

}  // namespace arsite
