#include "fpmod/pipeline.hpp"
#include "fpmod/selftest.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <string>

namespace {

fpmod::Json load_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  return fpmod::Json::parse(in);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"finitely presented modules over computable rings"};
  app.require_subcommand(1);

  std::string input;
  std::string output;
  CLI::App* compute = app.add_subcommand("compute", "run a pipeline document");
  compute->add_option("--input", input, "pipeline document (JSON)")->required();
  compute->add_option("--output", output, "result file; stdout when omitted");

  std::string facets_path;
  int degree = 0;
  bool cohomology = false;
  CLI::App* simplicial =
      app.add_subcommand("simplicial", "homology of a simplicial complex over the integers");
  simplicial->add_option("--facets", facets_path, "facet list (JSON)")->required();
  simplicial->add_option("--degree", degree, "degree to compute")->required();
  simplicial->add_flag("--cohomology", cohomology, "cohomology instead of homology");

  app.add_subcommand("selftest", "run the acceptance suites");

  CLI11_PARSE(app, argc, argv);

  try {
    if (compute->parsed()) {
      fpmod::PipelineResult res = fpmod::run_pipeline(load_json(input));
      const std::string text = res.document.dump(2) + "\n";
      if (output.empty()) {
        std::cout << text;
      } else {
        std::ofstream out(output);
        if (!out) throw std::runtime_error("cannot write " + output);
        out << text;
      }
      return res.exit_code;
    }
    if (simplicial->parsed()) {
      fpmod::SimplicialComplex sc = fpmod::simplicial_from_json(load_json(facets_path));
      fpmod::RingHandle z = fpmod::make_integers();
      fpmod::Presentation h = cohomology ? fpmod::simplicial_cohomology(sc, degree, z)
                                         : fpmod::simplicial_homology(sc, degree, z);
      std::cout << fpmod::decomposition_to_json(fpmod::canonical_decomposition(h)).dump(2) << "\n";
      return 0;
    }
    return fpmod::run_selftest(std::cout) ? 0 : 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
