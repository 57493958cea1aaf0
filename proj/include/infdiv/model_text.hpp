#pragma once

#include <cctype>
#include <charconv>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "infdiv/levy_models.hpp"

namespace infdiv {
namespace detail {

inline std::string_view trim_view(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

inline std::vector<std::string_view> split_top_level(std::string_view s, char sep) {
  std::vector<std::string_view> parts;
  int depth = 0;
  size_t start = 0;
  for (size_t i = 0; i < s.size(); ++i) {
    if (s[i] == '(') ++depth;
    else if (s[i] == ')') --depth;
    else if (s[i] == sep && depth == 0) {
      parts.push_back(trim_view(s.substr(start, i - start)));
      start = i + 1;
    }
  }
  parts.push_back(trim_view(s.substr(start)));
  return parts;
}

inline bool contains_top_level(std::string_view s, char sep) {
  int depth = 0;
  for (char ch : s) {
    if (ch == '(') ++depth;
    else if (ch == ')') --depth;
    else if (ch == sep && depth == 0) return true;
  }
  return false;
}

inline double parse_number(std::string_view s, const char* what) {
  s = trim_view(s);
  double v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc{} || ptr != s.data() + s.size())
    throw std::invalid_argument(std::string("model text: bad number for ") + what + ": '" +
                                std::string(s) + "'");
  return v;
}

inline std::vector<double> parse_number_list(std::string_view s, const char* what) {
  std::vector<double> out;
  for (auto part : split_top_level(s, ',')) out.push_back(parse_number(part, what));
  return out;
}

inline std::string format_number(double v) {
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v);
  (void)ec;
  return std::string(buf, ptr);
}

// Wraps the whole spec in parentheses and strips back on parse; only needed
// when a mixture spec with its own top-level ';' sits inside scaled/sum.
inline bool fully_parenthesized(std::string_view s) {
  if (s.size() < 2 || s.front() != '(' || s.back() != ')') return false;
  int depth = 0;
  for (size_t i = 0; i + 1 < s.size(); ++i) {
    if (s[i] == '(') ++depth;
    else if (s[i] == ')') --depth;
    if (depth == 0) return false;
  }
  return true;
}

inline LaplaceExponentModel parse_spec(std::string_view s);

inline std::string_view strip_call(std::string_view s, std::string_view head) {
  return trim_view(s.substr(head.size(), s.size() - head.size() - 1));
}

inline void parse_key_values(std::string_view s,
                             const std::vector<std::pair<std::string_view, double*>>& slots,
                             const char* model_name) {
  for (auto item : split_top_level(s, ',')) {
    if (item.empty()) continue;
    size_t eq = item.find('=');
    if (eq == std::string_view::npos)
      throw std::invalid_argument(std::string("model text: expected key=value in ") + model_name);
    std::string_view key = trim_view(item.substr(0, eq));
    bool matched = false;
    for (auto& [name, slot] : slots) {
      if (key == name) {
        *slot = parse_number(item.substr(eq + 1), model_name);
        matched = true;
        break;
      }
    }
    if (!matched)
      throw std::invalid_argument(std::string("model text: unknown parameter '") +
                                  std::string(key) + "' for " + model_name);
  }
}

inline LaplaceExponentModel parse_spec(std::string_view s) {
  s = trim_view(s);
  if (s.empty()) throw std::invalid_argument("model text: empty specification");
  if (fully_parenthesized(s)) return parse_spec(s.substr(1, s.size() - 2));
  if (s.substr(0, 7) == "scaled(" && s.back() == ')') {
    auto parts = split_top_level(strip_call(s, "scaled("), ';');
    if (parts.size() != 2)
      throw std::invalid_argument("model text: scaled(FACTOR;SPEC) takes exactly two parts");
    Scaled m;
    m.c = parse_number(parts[0], "scaled factor");
    m.inner = std::make_shared<const LaplaceExponentModel>(parse_spec(parts[1]));
    return LaplaceExponentModel{std::move(m)};
  }
  if (s.substr(0, 4) == "sum(" && s.back() == ')') {
    SumModel m;
    for (auto part : split_top_level(strip_call(s, "sum("), ';'))
      m.members.push_back(parse_spec(part));
    return LaplaceExponentModel{std::move(m)};
  }
  size_t colon = s.find(':');
  std::string_view name = trim_view(s.substr(0, colon));
  std::string_view params = colon == std::string_view::npos ? std::string_view{}
                                                            : trim_view(s.substr(colon + 1));
  if (name == "chi2") {
    ChiSquaredSum m;
    for (auto block : split_top_level(params, ';')) {
      size_t eq = block.find('=');
      if (eq == std::string_view::npos || trim_view(block.substr(0, eq)) != "weights")
        throw std::invalid_argument("model text: chi2 takes weights=w1,w2,...");
      m.weights = parse_number_list(block.substr(eq + 1), "chi2 weights");
    }
    return LaplaceExponentModel{std::move(m)};
  }
  if (name == "inverse-gaussian") {
    if (!params.empty()) throw std::invalid_argument("model text: inverse-gaussian takes no parameters");
    return LaplaceExponentModel{InverseGaussian{}};
  }
  if (name == "alpha-stable") {
    AlphaStable m;
    parse_key_values(params, {{"alpha", &m.alpha}, {"c", &m.c}}, "alpha-stable");
    return LaplaceExponentModel{m};
  }
  if (name == "stable-mix") {
    StableMixtureDiscrete m;
    for (auto block : split_top_level(params, ';')) {
      size_t eq = block.find('=');
      if (eq == std::string_view::npos)
        throw std::invalid_argument("model text: stable-mix takes alphas=...;weights=...");
      std::string_view key = trim_view(block.substr(0, eq));
      if (key == "alphas")
        m.alphas = parse_number_list(block.substr(eq + 1), "stable-mix alphas");
      else if (key == "weights")
        m.weights = parse_number_list(block.substr(eq + 1), "stable-mix weights");
      else
        throw std::invalid_argument("model text: stable-mix takes alphas=...;weights=...");
    }
    return LaplaceExponentModel{std::move(m)};
  }
  if (name == "uniform-mix") {
    if (!params.empty()) throw std::invalid_argument("model text: uniform-mix takes no parameters");
    return LaplaceExponentModel{UniformStableMix{}};
  }
  if (name == "ou-poisson") {
    OUPoisson m;
    parse_key_values(params, {{"eta", &m.eta}}, "ou-poisson");
    return LaplaceExponentModel{m};
  }
  if (name == "ou-gamma") {
    OUGamma m;
    parse_key_values(params, {{"eta", &m.eta}, {"kappa", &m.kappa}, {"theta", &m.theta}},
                     "ou-gamma");
    return LaplaceExponentModel{m};
  }
  throw std::invalid_argument(
      "model text: unknown model '" + std::string(name) +
      "'; expected one of chi2, inverse-gaussian, alpha-stable, stable-mix, uniform-mix, "
      "ou-poisson, ou-gamma, scaled(FACTOR;SPEC), sum(SPEC;SPEC;...)");
}

inline std::string format_number_list(const std::vector<double>& v) {
  std::string out;
  for (size_t i = 0; i < v.size(); ++i) {
    if (i) out += ',';
    out += format_number(v[i]);
  }
  return out;
}

inline std::string format_spec(const LaplaceExponentModel& model);

inline std::string format_member(const LaplaceExponentModel& model) {
  std::string s = format_spec(model);
  if (contains_top_level(s, ';')) return "(" + s + ")";
  return s;
}

inline std::string format_spec(const LaplaceExponentModel& model) {
  return std::visit(
      [](const auto& m) -> std::string {
        using T = std::decay_t<decltype(m)>;
        if constexpr (std::is_same_v<T, ChiSquaredSum>) {
          return "chi2:weights=" + format_number_list(m.weights);
        } else if constexpr (std::is_same_v<T, InverseGaussian>) {
          return "inverse-gaussian";
        } else if constexpr (std::is_same_v<T, AlphaStable>) {
          return "alpha-stable:alpha=" + format_number(m.alpha) + ",c=" + format_number(m.c);
        } else if constexpr (std::is_same_v<T, StableMixtureDiscrete>) {
          return "stable-mix:alphas=" + format_number_list(m.alphas) +
                 ";weights=" + format_number_list(m.weights);
        } else if constexpr (std::is_same_v<T, UniformStableMix>) {
          return "uniform-mix";
        } else if constexpr (std::is_same_v<T, OUPoisson>) {
          return "ou-poisson:eta=" + format_number(m.eta);
        } else if constexpr (std::is_same_v<T, OUGamma>) {
          return "ou-gamma:eta=" + format_number(m.eta) + ",kappa=" + format_number(m.kappa) +
                 ",theta=" + format_number(m.theta);
        } else if constexpr (std::is_same_v<T, Scaled>) {
          return "scaled(" + format_number(m.c) + ";" + format_member(*m.inner) + ")";
        } else if constexpr (std::is_same_v<T, SumModel>) {
          std::string out = "sum(";
          for (size_t i = 0; i < m.members.size(); ++i) {
            if (i) out += ';';
            out += format_member(m.members[i]);
          }
          return out + ")";
        } else {
          static_assert(std::is_same_v<T, CustomLevyDensity>);
          return "custom";
        }
      },
      model.v);
}

}  // namespace detail

// Parses the textual model grammar and returns the validated model.
inline LaplaceExponentModel parse_model(const std::string& text) {
  return validate(detail::parse_spec(text));
}

// Canonical textual form; parse_model(format_model(m)) reproduces m.
inline std::string format_model(const LaplaceExponentModel& model) {
  return detail::format_spec(model);
}

}  // namespace infdiv
