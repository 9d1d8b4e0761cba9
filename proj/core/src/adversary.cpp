// Copyright 2026 The georoute Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "georoute/adversary.hpp"

#include <map>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <utility>

#include "georoute/analysis.hpp"

namespace georoute {

const char* to_string(AdversaryCase c) {
  switch (c) {
    case AdversaryCase::TwoBlue:
      return "TwoBlue";
    case AdversaryCase::TwoRed:
      return "TwoRed";
    case AdversaryCase::ThreeBlue:
      return "ThreeBlue";
  }
  return "?";
}

bool AdversaryCertificate::holds() const {
  return validator.ok && routing.expectation.at_least(threshold);
}

namespace {

class Classifier {
 public:
  Classifier(const Strategy& s, std::size_t k, const ClassifyOptions& options)
      : s_(s), k_(k), options_(options) {}

  const ChainInstance& chain(Variant v, int alpha) {
    return lookup(v, alpha).first;
  }

  Color color(Variant v, int alpha) { return lookup(v, alpha).second; }

  std::vector<ClassifiedChain> take_log() { return std::move(log_); }

 private:
  const std::pair<ChainInstance, Color>& lookup(Variant v, int alpha) {
    alpha = ((alpha % 360) + 360) % 360;
    const auto key = std::make_pair(v, alpha);
    auto it = cache_.find(key);
    if (it == cache_.end()) {
      ChainInstance c = build_chain(v, alpha, k_);
      ChainColor color = classify_chain(s_, c, options_);
      log_.push_back({c.label(), color});
      it = cache_.emplace(key, std::make_pair(std::move(c), color.color)).first;
    }
    return it->second;
  }

  const Strategy& s_;
  std::size_t k_;
  ClassifyOptions options_;
  std::map<std::pair<Variant, int>, std::pair<ChainInstance, Color>> cache_;
  std::vector<ClassifiedChain> log_;
};

constexpr int kAngles[] = {0, 120, 240};

}  // namespace

AdversaryCertificate adversary(const Strategy& s, std::size_t k,
                               const AdversaryOptions& options) {
  if (k < 4 || k % 2 != 0) throw std::invalid_argument("adversary needs even k >= 4");
  Classifier classes(s, k, options.classify);
  AdversaryCertificate cert;
  cert.strategy = std::string(s.name());
  cert.k = k;
  cert.threshold = blue_threshold(k);

  std::optional<Assembly> built;
  for (int alpha : kAngles) {
    if (classes.color(Variant::A, alpha) == Color::Blue &&
        classes.color(Variant::B, alpha) == Color::Blue) {
      built = assemble_two_blue(classes.chain(Variant::A, alpha), classes.chain(Variant::B, alpha));
      cert.which = AdversaryCase::TwoBlue;
      break;
    }
  }
  // Here every angle has a Red chain. A(a) and B(a + 180) share a line.
  if (!built) {
    for (int alpha : kAngles) {
      int a = alpha;
      if (classes.color(Variant::A, a) != Color::Red) a += 180;
      if (classes.color(Variant::A, a) == Color::Red &&
          classes.color(Variant::B, a + 180) == Color::Red) {
        built = assemble_two_red(classes.chain(Variant::A, a), classes.chain(Variant::B, a + 180));
        cert.which = AdversaryCase::TwoRed;
        break;
      }
    }
  }
  if (!built) {
    std::vector<const ChainInstance*> picks;
    for (int alpha : kAngles) {
      if (classes.color(Variant::A, alpha) == Color::Blue) {
        picks.push_back(&classes.chain(Variant::A, alpha));
      } else if (classes.color(Variant::B, alpha) == Color::Blue) {
        picks.push_back(&classes.chain(Variant::B, alpha));
      }
    }
    if (picks.size() == 3) {
      built = assemble_three_blue(*picks[0], *picks[1], *picks[2]);
      cert.which = AdversaryCase::ThreeBlue;
    }
  }
  cert.colors = classes.take_log();
  if (!built) {
    std::string summary;
    for (const auto& c : cert.colors) {
      summary += " " + c.label + "=" + to_string(c.color.color);
    }
    throw std::runtime_error("no adversary case applies for " + cert.strategy + ":" + summary);
  }

  cert.graph = std::move(built->graph);
  cert.source = built->source;
  cert.target = built->target;
  cert.validator = validate_convex_subdivision(cert.graph);
  if (s.has_distribution()) {
    cert.routing = expected_routing_time(cert.graph, s, cert.source, cert.target);
  } else {
    const std::size_t cap = options.cap_factor * k * k;
    const MonteCarloResult mc = monte_carlo_walk(cert.graph, s, cert.source, cert.target,
                                                 options.trials, cap, options.seed);
    cert.routing.source = cert.source;
    cert.routing.target = cert.target;
    cert.routing.method = TimeMethod::MonteCarlo;
    cert.routing.expectation = ExpectedTime::finite(Rational(mc.summary.mean));
    cert.routing.monte_carlo = mc.summary;
  }
  return cert;
}

void serialize_certificate(std::ostream& out, const AdversaryCertificate& c) {
  out << "strategy=" << c.strategy << '\n';
  out << "k=" << c.k << '\n';
  out << "case=" << to_string(c.which) << '\n';
  out << "vertices=" << c.graph.vertex_count() << '\n';
  out << "edges=" << c.graph.edge_count() << '\n';
  out << "source=" << c.source << '\n';
  out << "target=" << c.target << '\n';
  for (const auto& chain : c.colors) {
    out << "color." << chain.label << '=' << to_string(chain.color.color) << ' '
        << chain.color.expectation.str() << '\n';
  }
  out << "method=" << to_string(c.routing.method) << '\n';
  out << "expectation=" << c.routing.expectation.str() << '\n';
  out << "threshold=" << to_string(c.threshold) << '\n';
  out << "validator=" << (c.validator.ok ? "ok" : "fail: " + c.validator.message) << '\n';
  out << "holds=" << (c.holds() ? "yes" : "no") << '\n';
}

std::string serialize_certificate(const AdversaryCertificate& c) {
  std::ostringstream out;
  serialize_certificate(out, c);
  return out.str();
}

}  // namespace georoute
