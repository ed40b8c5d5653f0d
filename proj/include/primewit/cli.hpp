#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace primewit::cli {

enum ExitCode : int { kOk = 0, kDataError = 1, kUsageError = 2 };

// Whole command line including the program name, e.g.
// {"primewit", "witness", "--n", "4", "--json"}.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err);

int cmd_gen(const std::string& spec, std::ostream& out, std::ostream& err);
int cmd_prime(std::istream& in, std::ostream& out, std::ostream& err, int jobs = 1);

struct WitnessOptions {
  int n = 3;
  bool json = false;
  bool fast_path = true;
  int jobs = 1;
};
int cmd_witness(std::istream& in, std::ostream& out, std::ostream& err,
                const WitnessOptions& opts);

struct VerifyOptions {
  int max_vertices = 5;
  std::uint64_t seed = 1;
  // Sampled graphs per order above the exhaustive limit.
  std::uint64_t samples = 100000;
  int matrix_host = 6;
  int matrix_pattern = 3;
};
constexpr int kVerifyExhaustiveMax = 6;
constexpr int kVerifyMaxVertices = 8;
int cmd_verify(std::ostream& out, std::ostream& err, const VerifyOptions& opts);

}  // namespace primewit::cli
