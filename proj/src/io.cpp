// SPDX-License-Identifier: Apache-2.0
#include "aprank/io.hpp"

#include <cstdio>
#include <fstream>

namespace aprank::io {

json tensor_to_json(const SymmetricTensor& f) {
  json coeffs = json::array();
  const auto& basis = f.basis();
  for (std::int64_t idx = 0; idx < f.dim(); ++idx) {
    double c = f.coeff(idx);
    if (c == 0.0) continue;
    auto alpha = basis.exponents(idx);
    coeffs.push_back({{"alpha", std::vector<int>(alpha.begin(), alpha.end())},
                      {"value", c}});
  }
  return {{"n", f.vars()}, {"d", f.degree()}, {"coeffs", std::move(coeffs)}};
}

SymmetricTensor tensor_from_json(const json& j) {
  if (!j.is_object() || !j.contains("n") || !j.contains("d"))
    throw InvalidArgument("tensor JSON must be an object with \"n\" and \"d\"");
  if (j.contains("terms"))
    throw InvalidArgument("this file holds a decomposition (\"terms\"), not a tensor");
  int n = j.at("n").get<int>();
  int d = j.at("d").get<int>();
  SymmetricTensor f(n, d);
  if (!j.contains("coeffs")) return f;
  const auto& coeffs = j.at("coeffs");
  if (!coeffs.is_array()) throw InvalidArgument("\"coeffs\" must be an array");
  std::vector<std::int32_t> alpha;
  for (const auto& entry : coeffs) {
    if (!entry.contains("alpha") || !entry.contains("value"))
      throw InvalidArgument("each coefficient needs \"alpha\" and \"value\"");
    alpha.assign(entry.at("alpha").begin(), entry.at("alpha").end());
    double v = entry.at("value").get<double>();
    f.coeff(f.basis().index_of(alpha)) = v;
  }
  return f;
}

json decomposition_to_json(const Decomposition& D) {
  json terms = json::array();
  for (const auto& t : D.terms()) {
    terms.push_back({{"coeff", t.coeff},
                     {"vector", std::vector<double>(t.vector.entries().begin(),
                                                    t.vector.entries().end())}});
  }
  return {{"n", D.vars()}, {"d", D.degree()}, {"terms", std::move(terms)}};
}

Decomposition decomposition_from_json(const json& j) {
  if (!j.is_object() || !j.contains("n") || !j.contains("d"))
    throw InvalidArgument("decomposition JSON must be an object with \"n\" and \"d\"");
  if (j.contains("coeffs"))
    throw InvalidArgument("this file holds a tensor (\"coeffs\"), not a decomposition");
  Decomposition D(j.at("n").get<int>(), j.at("d").get<int>());
  if (!j.contains("terms")) return D;
  for (const auto& t : j.at("terms")) {
    if (!t.contains("coeff") || !t.contains("vector"))
      throw InvalidArgument("each term needs \"coeff\" and \"vector\"");
    std::vector<double> v = t.at("vector").get<std::vector<double>>();
    D.add(t.at("coeff").get<double>(), UnitVector(std::move(v)));
  }
  return D;
}

json estimate_to_json(const EstimateResult& e) {
  return {{"value", e.value},
          {"std_error", e.std_error},
          {"samples", e.samples},
          {"method", method_name(e.method)}};
}

SymmetricTensor read_tensor(const std::string& path) {
  return tensor_from_json(read_json(path));
}

Decomposition read_decomposition(const std::string& path) {
  return decomposition_from_json(read_json(path));
}

void write_json(const std::string& path, const json& j) {
  std::ofstream out(path);
  if (!out) throw InvalidArgument("cannot open '" + path + "' for writing");
  out << j.dump(2) << "\n";
  if (!out) throw Error("write to '" + path + "' failed");
}

json read_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InvalidArgument("cannot open '" + path + "'");
  json j;
  try {
    in >> j;
  } catch (const json::parse_error& e) {
    throw InvalidArgument("malformed JSON in '" + path + "': " + e.what());
  }
  return j;
}

std::string format_double(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

void write_trace_csv(const std::string& path, const FWTrace& trace, int n) {
  std::ofstream out(path);
  if (!out) throw InvalidArgument("cannot open '" + path + "' for writing");
  out << "k,delta,gamma,sign";
  for (int i = 0; i < n; ++i) out << ",v" << i;
  out << "\n";
  for (const auto& row : trace.rows) {
    out << row.k << "," << format_double(row.delta) << "," << format_double(row.gamma)
        << "," << format_double(row.sign);
    for (double x : row.vector) out << "," << format_double(x);
    out << "\n";
  }
}

void write_bench_csv(const std::string& path, const std::vector<BenchRow>& rows) {
  std::ofstream out(path);
  if (!out) throw InvalidArgument("cannot open '" + path + "' for writing");
  out << "m,n,two_d,instance_epsilon,seed,ambient_dim,rank,error,error_std_error,"
         "wall_seconds,status,message\n";
  for (const auto& r : rows) {
    out << r.spec.m << "," << r.spec.n << "," << r.spec.two_d << ","
        << format_double(r.spec.epsilon) << "," << r.spec.seed << "," << r.ambient_dim
        << "," << r.rank << "," << format_double(r.error) << ","
        << format_double(r.error_std_error) << "," << format_double(r.wall_seconds)
        << "," << (r.failed ? "failed" : "ok") << ",\"" << r.message << "\"\n";
  }
}

json bench_to_json(const std::vector<BenchRow>& rows) {
  json arr = json::array();
  for (const auto& r : rows) {
    arr.push_back({{"spec",
                    {{"m", r.spec.m},
                     {"n", r.spec.n},
                     {"two_d", r.spec.two_d},
                     {"epsilon", r.spec.epsilon},
                     {"seed", r.spec.seed}}},
                   {"ambient_dim", r.ambient_dim},
                   {"rank", r.rank},
                   {"error", r.error},
                   {"error_std_error", r.error_std_error},
                   {"wall_seconds", r.wall_seconds},
                   {"status", r.failed ? "failed" : "ok"},
                   {"message", r.message}});
  }
  return arr;
}

} // namespace aprank::io
