#pragma once

#include <string>
#include <vector>

#include "context.hpp"

namespace cli {

struct GenArgs {
  std::string kind;
  int s = 11;
  int n = 1;
  double r = 1.0;
  double q = 0.5;
  int k = 10;
};

struct CoveringArgs {
  std::string input;
  std::vector<double> eps;
};

struct OmegaArgs {
  std::string input;
  int d = 1;
  std::string curve;
};

struct BoundArgs {
  std::string input;
  int d = 1;
  bool unit_volume = false;
};

struct ExactArgs {
  std::string input;
  int d = 1;
  int resolution = 0;
  std::size_t falsify = 0;
};

struct FavardArgs {
  std::string input;
  int d = 1;
  bool heuristic = false;
};

struct SpreadArgs {
  std::string input;
  double beta = 1.0;
  int p_max = 0;
  bool euclidean = false;
  bool heuristic = false;
  int d = 0;
  double cprime = 0.0;
};

struct VerifyArgs {
  std::string input;
  int d = 1;
  int resolution = 0;
  std::size_t trials = 10000;
};

struct ReproduceArgs {
  std::string section;
  std::string out_dir = ".";
};

// Each returns the process exit status.
int cmd_gen(const GenArgs& a, const GlobalOptions& g);
int cmd_covering(const CoveringArgs& a, const GlobalOptions& g);
int cmd_omega(const OmegaArgs& a, const GlobalOptions& g);
int cmd_bound(const BoundArgs& a, const GlobalOptions& g);
int cmd_exact(const ExactArgs& a, const GlobalOptions& g);
int cmd_favard(const FavardArgs& a, const GlobalOptions& g);
int cmd_spread(const SpreadArgs& a, const GlobalOptions& g);
int cmd_verify(const VerifyArgs& a, const GlobalOptions& g);
int cmd_reproduce(const ReproduceArgs& a, const GlobalOptions& g);

}  // namespace cli
