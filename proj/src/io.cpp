#include "bell/io.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <ostream>
#include <system_error>

namespace bell::io {

using nlohmann::json;

std::string format12(double x) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof(buf), x, std::chars_format::general, 12);
  return std::string(buf, res.ptr);
}

double round12(double x) {
  if (!std::isfinite(x)) return x;
  const auto text = format12(x);
  double out = x;
  std::from_chars(text.data(), text.data() + text.size(), out);
  return out;
}

json to_json(const HiddenInput& input) {
  json columns = json::array();
  for (std::size_t c = 0; c < kContexts; ++c) {
    json col = json::array();
    for (std::size_t l = 0; l < input.size(); ++l) col.push_back(round12(input(l, c)));
    columns.push_back(std::move(col));
  }
  return {{"kind", "input"}, {"n", input.size()}, {"p_lambda_given_context", std::move(columns)}};
}

json to_json(const SeparableOutput& output) {
  json alice = json::array();
  json bob = json::array();
  for (const auto& r : output.responses()) {
    alice.push_back({round12(r.alice[0]), round12(r.alice[1])});
    bob.push_back({round12(r.bob[0]), round12(r.bob[1])});
  }
  return {{"kind", "output"}, {"alice", std::move(alice)}, {"bob", std::move(bob)}};
}

json to_json(const Behavior& behavior) {
  json table = json::array();
  for (const auto& dist : behavior.table()) {
    json row = json::array();
    for (double p : dist) row.push_back(round12(p));
    table.push_back(std::move(row));
  }
  return {{"kind", "behavior"}, {"p_ab_given_xy", std::move(table)}};
}

json to_json(const MeasureReport& r) {
  return {{"s_opt", round12(r.s_opt)},     {"m", round12(r.m)},
          {"h", round12(r.h)},             {"h_legacy", r.h_legacy},
          {"k_tilde", round12(r.k_tilde)}, {"m_tilde", round12(r.m_tilde)},
          {"h_tilde", round12(r.h_tilde)}, {"f", round12(r.f)}};
}

json to_json(const std::vector<ReductionStage>& trace) {
  json out = json::array();
  for (const auto& s : trace) out.push_back({{"stage", s.stage}, {"f", round12(s.f)}, {"n", s.n}});
  return out;
}

namespace {

const json& member(const json& j, const char* key) {
  const auto it = j.find(key);
  if (it == j.end()) throw FormatError(std::string("missing key \"") + key + "\"");
  return *it;
}

std::vector<double> numbers(const json& j, std::size_t expected, const char* what) {
  if (!j.is_array() || j.size() != expected) {
    throw FormatError(std::string(what) + ": expected an array of " + std::to_string(expected) + " numbers");
  }
  std::vector<double> out;
  out.reserve(expected);
  for (const auto& v : j) {
    if (!v.is_number()) throw FormatError(std::string(what) + ": non-numeric entry");
    out.push_back(v.get<double>());
  }
  return out;
}

HiddenInput parse_input(const json& j, double tolerance) {
  const auto& n = member(j, "n");
  if (!n.is_number_integer() || n.get<long long>() < 1) throw FormatError("\"n\" must be a positive integer");
  const auto count = static_cast<std::size_t>(n.get<long long>());
  const auto& table = member(j, "p_lambda_given_context");
  if (!table.is_array() || table.size() != kContexts) {
    throw FormatError("\"p_lambda_given_context\" must hold 4 arrays, one per context");
  }
  std::array<std::vector<double>, kContexts> columns;
  for (std::size_t c = 0; c < kContexts; ++c) columns[c] = numbers(table[c], count, "p_lambda_given_context");
  return HiddenInput::from_columns(columns, tolerance);
}

SeparableOutput parse_output(const json& j) {
  const auto& alice = member(j, "alice");
  const auto& bob = member(j, "bob");
  if (!alice.is_array() || !bob.is_array() || alice.size() != bob.size()) {
    throw FormatError("\"alice\" and \"bob\" must be arrays of equal length");
  }
  std::vector<LocalResponse> responses;
  for (std::size_t l = 0; l < alice.size(); ++l) {
    const auto a = numbers(alice[l], 2, "alice");
    const auto b = numbers(bob[l], 2, "bob");
    responses.push_back({{a[0], a[1]}, {b[0], b[1]}});
  }
  return SeparableOutput::validate(std::move(responses));
}

Behavior parse_behavior(const json& j, double tolerance) {
  const auto& table = member(j, "p_ab_given_xy");
  if (!table.is_array() || table.size() != kContexts) throw FormatError("\"p_ab_given_xy\" must hold 4 arrays");
  std::array<Behavior::Distribution, kContexts> t{};
  for (std::size_t c = 0; c < kContexts; ++c) {
    const auto row = numbers(table[c], 4, "p_ab_given_xy");
    std::copy(row.begin(), row.end(), t[c].begin());
  }
  return Behavior::validate(t, tolerance);
}

json parse_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw FormatError("cannot open " + path);
  try {
    return json::parse(in);
  } catch (const json::exception& e) {
    throw FormatError(path + ": " + e.what());
  }
}

}  // namespace

Model model_from_json(const json& j, double tolerance) {
  if (!j.is_object()) throw FormatError("model file must hold a JSON object");
  const auto& kind = member(j, "kind");
  if (!kind.is_string()) throw FormatError("\"kind\" must be a string");
  const auto k = kind.get<std::string>();
  if (k == "input") return parse_input(j, tolerance);
  if (k == "output") return parse_output(j);
  if (k == "behavior") return parse_behavior(j, tolerance);
  throw FormatError("unknown model kind \"" + k + "\"");
}

HiddenInput input_from_json(const json& j, double tolerance) {
  auto model = model_from_json(j, tolerance);
  if (auto* in = std::get_if<HiddenInput>(&model)) return std::move(*in);
  throw FormatError("expected a model of kind \"input\"");
}

Model read_model(const std::string& path, double tolerance) { return model_from_json(parse_file(path), tolerance); }

HiddenInput read_input(const std::string& path, double tolerance) {
  return input_from_json(parse_file(path), tolerance);
}

void write_json(const std::string& path, const json& j) {
  std::ofstream out(path);
  if (!out) throw FormatError("cannot write " + path);
  out << j.dump(2) << '\n';
  if (!out) throw FormatError("failed writing " + path);
}

void write_region_csv(std::ostream& out, const BoundarySamples& samples) {
  out << (samples.dimension == 3 ? "m,h,s\n" : "m,h\n");
  for (const auto& p : samples.points) {
    out << format12(p[0]) << ',' << format12(p[1]);
    if (samples.dimension == 3) out << ',' << format12(p[2]);
    out << '\n';
  }
}

}  // namespace bell::io
