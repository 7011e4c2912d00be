#pragma once

#include <string>

#include "json.hpp"

#include "qws/analysis.hpp"
#include "qws/quotient.hpp"

namespace qws {

using json = nlohmann::ordered_json;

// Basis labels, |x|, |x->y| per pair, both reduced matrices as rows of
// [re, im] pairs.
json reduced_report(const RegularGraph& g, const TypePartition& part,
                    const ReducedBasis& basis, const ReducedOperator& u0,
                    const ReducedOperator& u);

json spectral_report_json(const SpectralReport& rep);
json doubling_report_json(const DoublingReport& rep);
json perturbation_json(const PerturbationResult& res);

void write_json(const json& j, const std::string& path);

}  // namespace qws
