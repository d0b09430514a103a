// SPDX-License-Identifier: Apache-2.0
#ifndef APRANK_IO_HPP
#define APRANK_IO_HPP

#include <string>
#include <vector>

#include <json.hpp>

#include "aprank/bench.hpp"
#include "aprank/frank_wolfe.hpp"
#include "aprank/norms.hpp"
#include "aprank/tensor.hpp"

namespace aprank::io {

using json = nlohmann::json;

// {"n":..., "d":..., "coeffs":[{"alpha":[...], "value":...}, ...]};
// monomials absent from "coeffs" are zero.
json tensor_to_json(const SymmetricTensor& f);
SymmetricTensor tensor_from_json(const json& j);

// {"n":..., "d":..., "terms":[{"coeff":..., "vector":[...]}, ...]}
json decomposition_to_json(const Decomposition& D);
Decomposition decomposition_from_json(const json& j);

json estimate_to_json(const EstimateResult& e);

SymmetricTensor read_tensor(const std::string& path);
Decomposition read_decomposition(const std::string& path);
void write_json(const std::string& path, const json& j);
json read_json(const std::string& path);

std::string format_double(double v); // round-trip decimal form for CSV cells

void write_trace_csv(const std::string& path, const FWTrace& trace, int n);
void write_bench_csv(const std::string& path, const std::vector<BenchRow>& rows);
json bench_to_json(const std::vector<BenchRow>& rows);

} // namespace aprank::io

#endif
