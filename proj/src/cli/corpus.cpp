#include "gca/cli/corpus.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>

#include "gca/errors.hpp"

namespace gca::cli {

namespace fs = std::filesystem;

std::vector<CorpusEntry> load_corpus(const std::string& dir) {
  if (!fs::is_directory(dir)) throw DomainError("not a directory: " + dir);
  std::vector<CorpusEntry> out;
  for (const auto& item : fs::directory_iterator(dir)) {
    if (item.path().extension() != ".graph") continue;
    CorpusEntry e{item.path().stem().string(), item.path().string(), nullptr};
    const fs::path exp = item.path().parent_path() / (e.name + ".expected.json");
    if (fs::exists(exp)) {
      std::ifstream in(exp);
      try {
        e.expected = Json::parse(in);
      } catch (const nlohmann::json::exception& ex) {
        throw ParseError(exp.string() + ": " + ex.what());
      }
    }
    out.push_back(std::move(e));
  }
  std::sort(out.begin(), out.end(), [](const CorpusEntry& a, const CorpusEntry& b) { return a.name < b.name; });
  return out;
}

Json corpus_actual(const Graph& g, const CorpusOptions& opts) {
  const StructureReport r = analyze(g);
  Json out;
  out["cycles"] = r.cycles.size();
  Json verdicts = Json::object();
  verdicts["af"] = r.af.holds;
  verdicts["locallyContractive"] = r.locally_contractive.holds;
  verdicts["cofinal"] = r.cofinal.holds;
  verdicts["essentiallyFree"] = r.essentially_free.holds;
  verdicts["essentiallyPrincipal"] = r.essentially_principal.holds;
  verdicts["simple"] = r.simple.holds;
  verdicts["purelyInfinite"] = r.purely_infinite_simple.holds;
  out["verdicts"] = verdicts;

  const InvariantFamily fam = enumerate_invariants(g, {opts.omega_bound, opts.cap});
  out["invariants"] = fam.invariants.size();
  out["idealLatticeApplies"] = r.essentially_principal.holds;
  out["omegaFamily"] = fam.omega_family;

  BasisOptions ck;
  ck.mode = RepMode::CuntzKrieger;
  const PathBasis ck_basis(g, ck);
  if (ck_basis.exact()) {
    const PathBasis t_basis(g, BasisOptions{});
    out["dimensions"] = Json{{"ck", algebra_dimension(ck_basis)}, {"toeplitz", algebra_dimension(t_basis)}};
    out["ckRelations"] = verify_relations(ck_basis, RelationSet::CuntzKrieger).all_hold();
  }
  return out;
}

namespace {
void compare(const Json& expected, const Json& actual, const std::string& prefix, std::vector<std::string>& out) {
  for (const auto& [key, value] : expected.items()) {
    if (!key.empty() && key.front() == '_') continue;  // comments
    const std::string path = prefix.empty() ? key : prefix + "." + key;
    if (!actual.contains(key)) {
      out.push_back(path + " (missing)");
    } else if (value.is_object()) {
      compare(value, actual.at(key), path, out);
    } else if (value != actual.at(key)) {
      out.push_back(path + ": expected " + value.dump() + ", got " + actual.at(key).dump());
    }
  }
}
}  // namespace

std::vector<std::string> corpus_mismatches(const Json& expected, const Json& actual) {
  std::vector<std::string> out;
  if (!expected.is_null()) compare(expected, actual, "", out);
  return out;
}

}  // namespace gca::cli
