// Copyright 2026 The Schmidt Games Authors
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

// Command-line front end: parses flags into an ExperimentSpec and runs it.

#include <cstdint>
#include <iostream>
#include <map>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "schmidt/experiment.h"

namespace {

// Flag values are collected as strings and typed when copied into params.
struct Leaf {
  CLI::App* app = nullptr;
  std::string subcommand;
  std::map<std::string, std::string> strings;
  std::map<std::string, double> reals;
  std::map<std::string, long> ints;
};

nlohmann::json ParseJsonFlag(const std::string& text, const char* what) {
  try {
    return nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception&) {
    throw CLI::ValidationError(what, "not valid JSON");
  }
}

std::string Flag(std::string key) {
  for (char& c : key) {
    if (c == '_') c = '-';
  }
  return "--" + key;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Schmidt games, Diophantine approximation and fractal measures"};
  app.require_subcommand(1);

  schmidt::ExperimentSpec spec;
  std::string params_text;
  app.add_option("--seed", spec.seed, "Seed for every random choice")
      ->default_val(1);
  app.add_option("--json", spec.json_path, "Write JSON here");
  app.add_option("--csv", spec.csv_path, "Write CSV here");
  app.add_option("--svg", spec.svg_path, "Write SVG here");
  app.add_option("--params", params_text,
                 "Extra parameters as a JSON object; flags take precedence");

  std::vector<std::unique_ptr<Leaf>> leaves;
  auto leaf = [&](CLI::App* parent, const std::string& name,
                  const std::string& full, const std::string& help) {
    auto l = std::make_unique<Leaf>();
    l->app = parent->add_subcommand(name, help);
    l->app->fallthrough();
    l->subcommand = full;
    leaves.push_back(std::move(l));
    return leaves.back().get();
  };
  auto str = [](Leaf* l, const std::string& flag, const std::string& key,
                const std::string& help) {
    l->app->add_option(flag, l->strings[key], help);
  };
  auto real = [](Leaf* l, const std::string& flag, const std::string& key,
                 const std::string& help) {
    l->app->add_option(flag, l->reals[key], help);
  };
  auto integer = [](Leaf* l, const std::string& flag, const std::string& key,
                    const std::string& help) {
    l->app->add_option(flag, l->ints[key], help);
  };

  CLI::App* game = app.add_subcommand("game", "Play games");
  game->require_subcommand(1);
  game->fallthrough();
  Leaf* play = leaf(game, "play", "game play", "Play a game between two strategies");
  str(play, "--alpha", "alpha", "White's ratio, p/q");
  str(play, "--beta", "beta", "Black's ratio, p/q");
  integer(play, "--dim", "dim", "Dimension");
  str(play, "--support", "support", "cantor, interval or none");
  integer(play, "--rounds", "rounds", "Rounds to play");
  str(play, "--white", "white", "White strategy name");
  str(play, "--black", "black", "Black strategy name");
  str(play, "--white-params", "white_params", "White parameters (JSON)");
  str(play, "--black-params", "black_params", "Black parameters (JSON)");
  str(play, "--initial-center", "initial_center", "Opening center, comma list");
  str(play, "--initial-radius", "initial_radius", "Opening radius");
  Leaf* windim = leaf(game, "windim-demo", "game windim-demo",
                      "Zero-centered Black on the Cantor set");
  integer(windim, "--N", "N", "alpha beta = 3^-N");
  integer(windim, "--rounds", "rounds", "Rounds to play");
  str(windim, "--white", "white", "White strategy name");

  Leaf* badness = leaf(&app, "badness", "badness",
                       "Running minimum of |x|^N dist(Ax, Z^M)^M");
  str(badness, "--matrix", "matrix", "Array of rows as JSON text, or a file holding it");
  integer(badness, "--cap", "cap", "Largest |x|");

  CLI::App* cf = app.add_subcommand("cf", "Continued fraction cylinders");
  cf->require_subcommand(1);
  cf->fallthrough();
  Leaf* cyl = leaf(cf, "cylinders", "cf cylinders", "List cylinders");
  str(cyl, "--alphabet", "alphabet", "Digits, comma list");
  integer(cyl, "--depth", "depth", "Word length");
  Leaf* ratio = leaf(cf, "ratio-check", "cf ratio-check",
                     "Check child/parent length ratios");
  str(ratio, "--alphabet", "alphabet", "Digits, comma list");
  integer(ratio, "--depth", "depth", "Largest parent length");

  CLI::App* ifs = app.add_subcommand("ifs", "Iterated function systems");
  ifs->require_subcommand(1);
  ifs->fallthrough();
  Leaf* render = leaf(ifs, "render", "ifs render", "Render an attractor");
  str(render, "--preset", "preset", "cantor, interval, square, koch, sierpinski");
  integer(render, "--depth", "depth", "Iteration depth");
  Leaf* dim = leaf(ifs, "dim", "ifs dim", "Box-counting and similarity dimension");
  str(dim, "--preset", "preset", "Preset name");
  integer(dim, "--depth", "depth", "Iteration depth");
  str(dim, "--scales", "scales", "base:kmin:kmax or a comma list");

  CLI::App* measure = app.add_subcommand("measure", "Measure diagnostics");
  measure->require_subcommand(1);
  measure->fallthrough();
  for (const char* kind : {"doubling", "decay"}) {
    Leaf* m = leaf(measure, kind, std::string("measure ") + kind,
                   std::string(kind) + " estimate");
    str(m, "--preset", "preset", "cf13, cantor, sierpinski, koch, lebesgue");
    str(m, "--scales", "scales", "base:kmin:kmax or a comma list");
    integer(m, "--depth", "depth", "Cell depth");
    integer(m, "--samples", "samples", "Sample centers");
    if (std::string(kind) == "decay") {
      integer(m, "--levels", "levels", "eps / rho levels");
      str(m, "--reading", "reading", "equal or sup");
    }
  }

  CLI::App* theorem = app.add_subcommand("theorem", "Induction schedule");
  theorem->require_subcommand(1);
  theorem->fallthrough();
  Leaf* sched = leaf(theorem, "schedule", "theorem schedule", "Stage windows");
  real(sched, "--R", "R", "Base R > 1");
  integer(sched, "--M", "M", "Rows");
  integer(sched, "--N", "N", "Columns");
  integer(sched, "--stages", "stages", "Stages to list");

  try {
    app.parse(argc, argv);
    if (!params_text.empty()) {
      spec.params = ParseJsonFlag(params_text, "--params");
      if (!spec.params.is_object()) {
        throw CLI::ValidationError("--params", "must be a JSON object");
      }
    }
    Leaf* chosen = nullptr;
    for (auto& l : leaves) {
      if (l->app->parsed()) chosen = l.get();
    }
    if (chosen == nullptr) throw CLI::RequiredError("subcommand");
    spec.subcommand = chosen->subcommand;
    for (const auto& [key, value] : chosen->strings) {
      if (chosen->app->get_option(Flag(key))->count() == 0) continue;
      if (key == "white_params" || key == "black_params") {
        const std::string who = key.substr(0, 5);
        if (!spec.params[who].is_object()) {
          spec.params[who] = {{"name", spec.params[who].is_string()
                                           ? spec.params[who]
                                           : nlohmann::json("lazy")}};
        }
        spec.params[who]["params"] = ParseJsonFlag(value, key.c_str());
      } else if (key == "white" || key == "black") {
        if (spec.params[key].is_object()) {
          spec.params[key]["name"] = value;
        } else {
          spec.params[key] = {{"name", value}};
        }
      } else if (key == "initial_center" || key == "initial_radius") {
        nlohmann::json& init = spec.params["initial"];
        if (!init.is_object()) init = {{"center", {"0"}}, {"radius", "1"}};
        if (key == "initial_radius") {
          init["radius"] = value;
        } else {
          nlohmann::json c = nlohmann::json::array();
          std::string item;
          for (char ch : value + ",") {
            if (ch == ',') {
              if (!item.empty()) c.push_back(item);
              item.clear();
            } else {
              item += ch;
            }
          }
          init["center"] = c;
        }
      } else {
        spec.params[key] = value;
      }
    }
    for (const auto& [key, value] : chosen->reals) {
      if (chosen->app->get_option(Flag(key))->count()) spec.params[key] = value;
    }
    for (const auto& [key, value] : chosen->ints) {
      if (chosen->app->get_option(Flag(key))->count()) spec.params[key] = value;
    }
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : schmidt::kExitInvalidSpec;
  }
  return schmidt::Run(spec, std::cout, std::cerr);
}
