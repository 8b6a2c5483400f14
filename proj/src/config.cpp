// Copyright 2026 The Occam Graph Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "occam/config.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <functional>
#include <map>
#include <sstream>

#include "occam/errors.hpp"

namespace occam {

std::vector<double> arithmetic_grid(double start, double stop, double step) {
  if (!(step > 0.0) || !std::isfinite(start) || !std::isfinite(stop) || stop < start) {
    throw DomainError("arithmetic_grid: need start <= stop and step > 0");
  }
  std::vector<double> out;
  for (long i = 0;; ++i) {
    const double v = start + static_cast<double>(i) * step;
    if (v > stop + 1e-9 * step) break;
    out.push_back(std::round(v * 1e12) / 1e12);
  }
  return out;
}

namespace {

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

std::vector<std::string> split_list(const std::string& v) {
  std::vector<std::string> out;
  std::stringstream ss(v);
  std::string item;
  while (std::getline(ss, item, ',')) {
    item = trim(item);
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

template <typename T>
T parse_number(const std::string& s, std::size_t line) {
  T v{};
  const char* end = s.data() + s.size();
  const auto [ptr, ec] = std::from_chars(s.data(), end, v);
  if (ec != std::errc() || ptr != end) throw ParseError("not a number: '" + s + "'", line);
  return v;
}

std::vector<double> parse_real_list(const std::string& v, std::size_t line) {
  std::vector<double> out;
  for (const std::string& item : split_list(v)) {
    if (item.find(':') != std::string::npos) {
      std::stringstream ss(item);
      std::string a, b, c;
      if (!std::getline(ss, a, ':') || !std::getline(ss, b, ':') || !std::getline(ss, c)) {
        throw ParseError("range must be start:stop:step", line);
      }
      try {
        for (double x : arithmetic_grid(parse_number<double>(trim(a), line),
                                        parse_number<double>(trim(b), line),
                                        parse_number<double>(trim(c), line))) {
          out.push_back(x);
        }
      } catch (const DomainError& e) {
        throw ParseError(e.what(), line);
      }
    } else {
      out.push_back(parse_number<double>(item, line));
    }
  }
  if (out.empty()) throw ParseError("empty list", line);
  return out;
}

void check_open_unit(const std::vector<double>& v, const char* key, std::size_t line) {
  for (double x : v) {
    if (!(x > 0.0 && x < 1.0)) {
      throw ParseError(std::string(key) + " values must lie in (0, 1)", line);
    }
  }
}

int positive_int(const std::string& v, const char* key, std::size_t line) {
  const int x = parse_number<int>(v, line);
  if (x < 1) throw ParseError(std::string(key) + " must be >= 1", line);
  return x;
}

bool parse_bool(const std::string& v, const char* key, std::size_t line) {
  if (v == "1" || v == "true") return true;
  if (v == "0" || v == "false") return false;
  throw ParseError(std::string(key) + " must be 0/1/true/false", line);
}

}  // namespace

SweepConfig parse_sweep_config(std::istream& in) {
  SweepConfig c;
  using Setter = std::function<void(const std::string&, std::size_t)>;
  const std::map<std::string, Setter> setters = {
      {"experiment", [&](const std::string& v, std::size_t) { c.experiment = v; }},
      {"n_v",
       [&](const std::string& v, std::size_t line) {
         c.n_v.clear();
         for (const std::string& s : split_list(v)) {
           const auto n = parse_number<std::int64_t>(s, line);
           if (n < 1) throw ParseError("n_v must be >= 1", line);
           c.n_v.push_back(n);
         }
         if (c.n_v.empty()) throw ParseError("empty list", line);
       }},
      {"p",
       [&](const std::string& v, std::size_t line) {
         c.p = parse_real_list(v, line);
         check_open_unit(c.p, "p", line);
       }},
      {"x1",
       [&](const std::string& v, std::size_t line) {
         c.x1 = parse_real_list(v, line);
         check_open_unit(c.x1, "x1", line);
       }},
      {"x2",
       [&](const std::string& v, std::size_t line) {
         c.x2 = parse_real_list(v, line);
         check_open_unit(c.x2, "x2", line);
       }},
      {"eps",
       [&](const std::string& v, std::size_t line) {
         c.eps = parse_real_list(v, line);
         check_open_unit(c.eps, "eps", line);
       }},
      {"delta",
       [&](const std::string& v, std::size_t line) {
         c.delta = parse_real_list(v, line);
         for (double d : c.delta) {
           if (!(d > 0.0)) throw ParseError("delta values must be positive", line);
         }
       }},
      {"reps", [&](const std::string& v, std::size_t line) { c.reps = positive_int(v, "reps", line); }},
      {"outer_reps",
       [&](const std::string& v, std::size_t line) { c.outer_reps = positive_int(v, "outer_reps", line); }},
      {"inner_reps",
       [&](const std::string& v, std::size_t line) { c.inner_reps = positive_int(v, "inner_reps", line); }},
      {"k",
       [&](const std::string& v, std::size_t line) {
         c.k.clear();
         for (const std::string& s : split_list(v)) c.k.push_back(positive_int(s, "k", line));
         if (c.k.empty()) throw ParseError("empty list", line);
       }},
      {"loops", [&](const std::string& v, std::size_t line) { c.loops = parse_bool(v, "loops", line); }},
      {"membership_prior",
       [&](const std::string& v, std::size_t line) {
         c.membership_prior = parse_bool(v, "membership_prior", line);
       }},
      {"seed", [&](const std::string& v, std::size_t line) { c.seed = parse_number<std::uint64_t>(v, line); }},
      {"threads",
       [&](const std::string& v, std::size_t line) { c.threads = positive_int(v, "threads", line); }},
      {"files", [&](const std::string& v, std::size_t) { c.files = split_list(v); }},
      {"membership", [&](const std::string& v, std::size_t) { c.membership = split_list(v); }},
  };

  std::string raw;
  std::size_t line = 0;
  while (std::getline(in, raw)) {
    ++line;
    const auto hash = raw.find('#');
    const std::string text = trim(hash == std::string::npos ? raw : raw.substr(0, hash));
    if (text.empty()) continue;
    const auto eq = text.find('=');
    if (eq == std::string::npos) throw ParseError("expected key = value", line);
    const std::string key = trim(text.substr(0, eq));
    const std::string value = trim(text.substr(eq + 1));
    const auto it = setters.find(key);
    if (it == setters.end()) throw ParseError("unknown key '" + key + "'", line);
    if (value.empty()) throw ParseError("empty value for '" + key + "'", line);
    it->second(value, line);
  }

  if (c.p.empty()) c.p = arithmetic_grid(0.30, 0.70, 0.01);
  if (c.x1.empty()) c.x1 = arithmetic_grid(0.05, 0.95, 0.05);
  if (c.x2.empty()) c.x2 = c.x1;
  if (c.eps.empty()) c.eps = arithmetic_grid(0.01, 0.99, 0.01);
  if (c.delta.empty()) c.delta = arithmetic_grid(0.01, 0.99, 0.01);
  return c;
}

SweepConfig load_sweep_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open config '" + path + "'", 0);
  return parse_sweep_config(in);
}

}  // namespace occam
