#include <doctest.h>

#include <array>
#include <cstdio>
#include <memory>
#include <string>

#include <json.hpp>

#include "semistable/cli.hpp"

using nlohmann::json;
namespace cli = semistable::cli;

namespace {

json certify_text(std::string_view command, const std::string& doc, cli::Flags flags = {}) {
  flags.compact = true;
  const auto out = cli::run(command, doc, flags);
  REQUIRE_MESSAGE(out.exit_code == 0, out.diagnostics);
  return json::parse(out.output);
}

int exit_code(std::string_view command, const std::string& doc, cli::Flags flags = {}) {
  return cli::run(command, doc, flags).exit_code;
}

struct Proc {
  int status;
  std::string out;
};

Proc run_binary(const std::string& args, const std::string& stdin_text) {
  const std::string cmd = "printf '%s' '" + stdin_text + "' | " SEMISTABLE_GATE_BINARY " " + args + " 2>/dev/null";
  std::unique_ptr<FILE, int (*)(FILE*)> pipe(popen(cmd.c_str(), "r"), pclose);
  REQUIRE(pipe);
  std::string out;
  std::array<char, 4096> buf{};
  std::size_t got;
  while ((got = fread(buf.data(), 1, buf.size(), pipe.get())) > 0) out.append(buf.data(), got);
  const int raw = pclose(pipe.release());
  return {WEXITSTATUS(raw), out};
}

const std::string kField = R"("d":1,"disc":1,"h_plus":1)";

}  // namespace

TEST_CASE("ec-irred example") {
  const auto c = certify_text("ec-irred", "{" + kField + R"(,"ell_E":2,"ell":17})");
  const auto& v = c["result"]["verdicts"][0];
  CHECK(v["conclusion"] == "Empty");
  CHECK(v["reading"] == "E[ell] is irreducible");
  CHECK(v["situation"] == "a");
  CHECK(v["threshold"] == "16");
}

TEST_CASE("tame-weights example") {
  const auto c = certify_text("tame-weights", R"({"ell":5,"h":2,"n_f":7})");
  CHECK(c["result"]["digits"] == json::array({1, 2}));
  CHECK(c["result"]["canonical"] == 7);
  CHECK(c["result"]["orbit"] == json::array({7, 11}));
}

TEST_CASE("gate example") {
  const auto c = certify_text(
      "gate", R"({"poly":[2,1,1],"q":2,"weights":[1,1],"w_bar":2,"s":2,"u":2,"t":[1,1],"ell":7,"d":1,"r":1})");
  CHECK(c["result"]["outcome"] == "CongruentBelowBound");
  CHECK(c["result"]["bound"] == "64");
  CHECK(c["result"]["congruent"] == true);
}

TEST_CASE("weil-check, power-transform and constants") {
  const auto w = certify_text("weil-check", R"({"poly":[2,1,1],"q":2,"weights":[1,1]})");
  CHECK(w["result"]["validate_weights"] == true);
  CHECK(w["result"]["functional_equation"] == true);
  const auto p = certify_text("power-transform", R"({"poly":[2,1,1],"s":2})");
  CHECK(p["result"]["poly"] == json::array({"4", "3", "1"}));
  CHECK(p["result"]["display"] == "T^2 + 3T + 4");
  const auto k = certify_text("constants", "{" + kField + R"(,"n":2,"ell0":2,"r":1,"w":1})");
  CHECK(k["result"]["C1"] == "16");
  CHECK(k["result"]["M"] == "2");
  const auto kc = certify_text("constants", "{" + kField + R"(,"n":1,"ell0":2,"r":0,"w_bar":3})");
  CHECK(kc["result"]["eps1"] == "3/2");
  CHECK(kc["result"]["C1"] == "8");
}

TEST_CASE("decide batches ells and reports min_ell") {
  cli::Flags flags;
  flags.min_ell = true;
  flags.ells = {"13"};
  const auto c = certify_text("decide", "{" + kField + R"(,"n":2,"ell0":2,"r":1,"w":1,"cyclotomic":true,"ells":[17,13]})",
                              flags);
  // document order, flag values appended, duplicates dropped
  CHECK(c["input"]["ells"] == json::array({"17", "13"}));
  const auto& verdicts = c["result"]["verdicts"];
  REQUIRE(verdicts.size() == 6);  // Trivial, Cor1, Cor2 for each ell
  bool cor1_17 = false;
  for (const auto& v : verdicts) {
    CHECK((v["conclusion"] == "Empty" || v["conclusion"] == "NotDecided"));
    if (v["ell"] == "17" && v["theorem"] == "Cor1") {
      cor1_17 = true;
      CHECK(v["conclusion"] == "Empty");
      CHECK(v["situation"] == "a");
    }
    if (v["ell"] == "13" && v["theorem"] != "Trivial") CHECK(v["conclusion"] == "NotDecided");
  }
  CHECK(cor1_17);
  CHECK(c["result"]["min_ell"]["Cor1"] == "17");
}

TEST_CASE("schema and precondition errors map to exit codes") {
  CHECK(exit_code("constants", "not json") == cli::kExitSchema);
  CHECK(exit_code("nope", "{}") == cli::kExitSchema);
  CHECK(exit_code("constants", "{" + kField + R"(,"n":2,"ell0":2,"r":1,"w":1,"w_bar":2})") == cli::kExitSchema);
  CHECK(exit_code("constants", "{" + kField + R"(,"n":2,"ell0":2,"r":1,"w":1,"extra":0})") == cli::kExitSchema);
  CHECK(exit_code("constants", "{" + kField + R"(,"n":2,"ell0":2,"r":1,"w":-1})") == cli::kExitSchema);
  CHECK(exit_code("constants", "{" + kField + R"(,"n":2,"ell0":2,"r":1,"w":1.5})") == cli::kExitSchema);
  CHECK(exit_code("constants", R"({"d":1,"disc":1,"h_plus":2,"n":2,"ell0":2,"r":1,"w":1})") ==
        cli::kExitPrecondition);
  CHECK(exit_code("decide", "{" + kField + R"(,"n":2,"ell0":2,"r":1,"w":1,"ell":2})") == cli::kExitPrecondition);
  CHECK(exit_code("decide", "{" + kField + R"(,"n":2,"ell0":2,"r":1,"w":1,"ell":15})") == cli::kExitPrecondition);
  CHECK(exit_code("decide", R"({"d":2,"disc":5,"h_plus":1,"n":2,"ell0":2,"r":1,"w":1,"ell":17})") ==
        cli::kExitSchema);
  CHECK(exit_code("etale", "{" + kField + R"(,"b_w":2,"ell_X":2,"w":2,"ell":17})") == cli::kExitPrecondition);
  CHECK(exit_code("tame-weights", R"({"ell":5,"h":2,"n_f":24})") == cli::kExitPrecondition);
  CHECK(exit_code("weil-check", R"({"poly":[2,1,2],"q":2,"weights":[1,1]})") == cli::kExitPrecondition);
  CHECK(exit_code("gate-search", R"({"q":2,"n":[2,4],"s_max":2,"ell_max":200,"budget":10})") ==
        cli::kExitPrecondition);
}

TEST_CASE("certificates are deterministic and round trip") {
  const std::vector<std::pair<std::string, std::string>> docs{
      {"decide", "{" + kField + R"(,"n":3,"ell0":2,"r":1,"w":1,"ells":[53,47]})"},
      {"rt", "{" + kField + R"(,"g":2,"variant":"st","ell":193})"},
      {"etale", "{" + kField + R"(,"b_w":4,"ell_X":2,"w":1,"ell":193})"},
      {"gate-search", R"({"q":2,"n":2,"s_max":2,"ell_max":50})"},
      {"weil-check", R"({"poly":[2,1,1],"q":2,"weights":[1,1],"tolerance":"1/1000"})"},
  };
  for (const auto& [command, doc] : docs) {
    const auto a = cli::run(command, doc);
    const auto b = cli::run(command, doc);
    REQUIRE_MESSAGE(a.exit_code == 0, a.diagnostics);
    CHECK(a.output == b.output);
    const auto cert = json::parse(a.output);
    const auto again = certify_text(command, cert["input"].dump());
    CHECK(again["result"] == cert["result"]);
    CHECK(again["input"] == cert["input"]);
  }
}

TEST_CASE("gate-search reports no hits above the bound") {
  const auto c = certify_text("gate-search", R"({"q":2,"n":2,"s_max":2,"ell_max":100})");
  CHECK(c["result"]["hits_above_bound"] == 0);
  bool found = false;
  for (const auto& h : c["result"]["hits"])
    found = found || (h["poly"] == json::array({"2", "1", "1"}) && h["s"] == 2 && h["ell"] == "7" &&
                      h["t"] == json::array({1, 1}));
  CHECK(found);
}

TEST_CASE("the binary reads stdin and files and sets exit codes") {
  const auto ok = run_binary("tame-weights --json", R"({"ell":5,"h":2,"n_f":7})");
  CHECK(ok.status == 0);
  CHECK(json::parse(ok.out)["result"]["canonical"] == 7);
  CHECK(run_binary("tame-weights", "{").status == 2);
  CHECK(run_binary("tame-weights --bogus-flag", "{}").status == 2);
  CHECK(run_binary("tame-weights", R"({"ell":4,"h":1,"n_f":0})").status == 3);
  CHECK(run_binary("tame-weights --input /nonexistent/file.json", "").status == 2);
  const auto flagged = run_binary("ec-irred --json --ell 19 --min-ell", "{" + kField + R"(,"ell_E":2,"ell":17})");
  CHECK(flagged.status == 0);
  const auto c = json::parse(flagged.out);
  CHECK(c["result"]["verdicts"].size() == 2);
  CHECK(c["result"]["min_ell"] == "17");
}
