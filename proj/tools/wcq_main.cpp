#include <cstdint>
#include <iostream>
#include <random>
#include <string>

#include <CLI11.hpp>

#include "wcq/io.hpp"
#include "wcq/json_io.hpp"
#include "wcq/projection.hpp"

namespace {

using namespace wcq;

bool gJson = false;
int gRc = 0;

void emit(const std::string& text, const std::string& json) {
  std::cout << (gJson ? json : text) << "\n";
}

void emitValue(const mpz_class& v) {
  emit(v.get_str(), "{\"value\":\"" + v.get_str() + "\"}");
}

void addJsonFlag(CLI::App* cmd) { cmd->add_flag("--json", gJson, "machine-readable output"); }

ShaComb randomTensor(std::mt19937_64& rng, unsigned maxHead, unsigned maxLen, unsigned maxEntry) {
  std::uniform_int_distribution<unsigned> dh(0, maxHead), dl(0, maxLen), de(0, maxEntry);
  mpz_class head = dh(rng);
  WeakComposition tail(dl(rng));
  for (auto& t : tail) t = de(rng);
  return ShaComb::single(PureTensor(head, tail));
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"weak-composition quasi-symmetric functions, exact arithmetic"};
  app.require_subcommand(1);
  addJsonFlag(&app);

  std::string argA, argB;

  auto* mul = app.add_subcommand("mul", "product M_a * M_b in the M basis");
  mul->add_option("a", argA, "composition literal, e.g. \"(e,2)\"")->required();
  mul->add_option("b", argB)->required();
  addJsonFlag(mul);
  mul->callback([&] {
    MComb r = productM(MComb::single(parseComposition(argA)), MComb::single(parseComposition(argB)));
    emit(printM(r), jsonM(r));
  });

  auto* cop = app.add_subcommand("coprod", "deconcatenation coproduct of M_a");
  cop->add_option("a", argA)->required();
  addJsonFlag(cop);
  cop->callback([&] {
    TensorComb r = coproduct(MComb::single(parseComposition(argA)));
    emit(printTensor(r), jsonTensor(r));
  });

  auto* cou = app.add_subcommand("counit", "counit of M_a");
  cou->add_option("a", argA)->required();
  addJsonFlag(cou);
  cou->callback([&] { emitValue(counit(MComb::single(parseComposition(argA)))); });

  auto* ant = app.add_subcommand("antipode", "antipode S(M_a) in the M basis");
  ant->add_option("a", argA)->required();
  addJsonFlag(ant);
  ant->callback([&] {
    MComb r = antipode(MComb::single(parseComposition(argA)));
    emit(printM(r), jsonM(r));
  });

  auto* m2f = app.add_subcommand("m2f", "expand M_a in the fundamental basis");
  m2f->add_option("a", argA)->required();
  addJsonFlag(m2f);
  m2f->callback([&] {
    MComb r = mToF(MComb::single(parseComposition(argA)));
    emit(printM(r, 'F'), jsonM(r, 'F'));
  });

  auto* f2m = app.add_subcommand("f2m", "expand F_a in the monomial basis");
  f2m->add_option("a", argA)->required();
  addJsonFlag(f2m);
  f2m->callback([&] {
    MComb r = fToM(MComb::single(parseComposition(argA)));
    emit(printM(r), jsonM(r));
  });

  auto* prj = app.add_subcommand("phi", "projection onto the eps-free subalgebra");
  prj->add_option("a", argA)->required();
  addJsonFlag(prj);
  prj->callback([&] {
    MComb r = phi(MComb::single(parseComposition(argA)));
    emit(printM(r), jsonM(r));
  });

  std::size_t kcLen = 3;
  unsigned long kcEntry = 2;
  auto* kc = app.add_subcommand("kernel-check", "verify the kernel basis at a truncation");
  kc->add_option("--max-len", kcLen, "max composition length")->capture_default_str();
  kc->add_option("--max-entry", kcEntry, "max positive entry")->capture_default_str();
  addJsonFlag(kc);
  kc->callback([&] {
    KernelReport r = verifyKernelTruncation(kcLen, kcEntry);
    std::string text = "span dimension:    " + std::to_string(r.spanDim) +
                       "\nimage rank:        " + std::to_string(r.rank) +
                       "\nkernel dimension:  " + std::to_string(r.kernelDim) +
                       "\nkernel basis size: " + std::to_string(r.basisCount) +
                       "\nbasis annihilated: " + (r.allAnnihilated ? "yes" : "no") +
                       "\nkernel check:      " + (r.pass() ? "PASS" : "FAIL");
    std::string json = std::string("{\"spanDim\":") + std::to_string(r.spanDim) +
                       ",\"rank\":" + std::to_string(r.rank) +
                       ",\"kernelDim\":" + std::to_string(r.kernelDim) +
                       ",\"basisCount\":" + std::to_string(r.basisCount) +
                       ",\"allAnnihilated\":" + (r.allAnnihilated ? "true" : "false") +
                       ",\"pass\":" + (r.pass() ? "true" : "false") + "}";
    emit(text, json);
    if (!r.pass()) gRc = 1;
  });

  auto* sha = app.add_subcommand("sha", "free Rota-Baxter algebra on one generator");
  sha->require_subcommand(1);

  auto* smul = sha->add_subcommand("mul", "diamond product of two pure tensors");
  smul->add_option("a", argA, "pure tensor literal, e.g. \"x^2|0|3\" or \"1\"")->required();
  smul->add_option("b", argB)->required();
  addJsonFlag(smul);
  smul->callback([&] {
    ShaComb r = diamond(ShaComb::single(parsePureTensor(argA)),
                        ShaComb::single(parsePureTensor(argB)));
    emit(printSha(r), jsonSha(r));
  });

  auto* scop = sha->add_subcommand("coprod", "coproduct of a pure tensor");
  scop->add_option("a", argA)->required();
  addJsonFlag(scop);
  scop->callback([&] {
    ShaTensorComb r = shaCoproduct(ShaComb::single(parsePureTensor(argA)));
    emit(printShaTensor(r), jsonShaTensor(r));
  });

  auto* sant = sha->add_subcommand("antipode", "antipode of a pure tensor");
  sant->add_option("a", argA)->required();
  addJsonFlag(sant);
  sant->callback([&] {
    ShaComb r = shaAntipode(ShaComb::single(parsePureTensor(argA)));
    emit(printSha(r), jsonSha(r));
  });

  auto* sp = sha->add_subcommand("P", "Rota-Baxter operator (left shift)");
  sp->add_option("a", argA)->required();
  addJsonFlag(sp);
  sp->callback([&] {
    ShaComb r = rbOperator(ShaComb::single(parsePureTensor(argA)));
    emit(printSha(r), jsonSha(r));
  });

  unsigned rbTrials = 200, rbHead = 3, rbLen = 2, rbEntry = 3;
  std::uint64_t rbSeed = 12345;
  auto* rb = app.add_subcommand("rb-check", "verify the Rota-Baxter identity on random pairs");
  rb->add_option("--trials", rbTrials)->capture_default_str();
  rb->add_option("--seed", rbSeed)->capture_default_str();
  rb->add_option("--max-head", rbHead)->capture_default_str();
  rb->add_option("--max-len", rbLen)->capture_default_str();
  rb->add_option("--max-entry", rbEntry)->capture_default_str();
  addJsonFlag(rb);
  rb->callback([&] {
    ShaComb x = ShaComb::single(PureTensor(1, {}));
    ShaComb expect = 2 * ShaComb::single(PureTensor(0, {1, 1})) + ShaComb::single(PureTensor(0, {2}));
    bool worked = diamond(rbOperator(x), rbOperator(x)) == expect && rbIdentityCheck(x, x);
    std::mt19937_64 rng(rbSeed);
    unsigned bad = 0;
    for (unsigned i = 0; i < rbTrials; ++i) {
      ShaComb u = randomTensor(rng, rbHead, rbLen, rbEntry);
      ShaComb v = randomTensor(rng, rbHead, rbLen, rbEntry);
      if (!rbIdentityCheck(u, v)) ++bad;
    }
    bool pass = worked && bad == 0;
    std::string text = std::string("worked case P(x)P(x): ") + (worked ? "PASS" : "FAIL") +
                       "\nrandom pairs (" + std::to_string(rbTrials) + ", seed " +
                       std::to_string(rbSeed) + "): " + (bad == 0 ? "PASS" : "FAIL");
    std::string json = std::string("{\"workedCase\":") + (worked ? "true" : "false") +
                       ",\"trials\":" + std::to_string(rbTrials) +
                       ",\"seed\":" + std::to_string(rbSeed) +
                       ",\"failures\":" + std::to_string(bad) +
                       ",\"pass\":" + (pass ? "true" : "false") + "}";
    emit(text, json);
    if (!pass) gRc = 1;
  });

  std::size_t exVars = 0;
  std::string exBasis = "M";
  auto* ex = app.add_subcommand("expand", "truncated power-series expansion of M_a or F_a");
  ex->add_option("--vars", exVars, "number of variables")->required();
  ex->add_option("--basis", exBasis)->check(CLI::IsMember({"M", "F"}))->capture_default_str();
  ex->add_option("a", argA)->required();
  addJsonFlag(ex);
  ex->callback([&] {
    Composition a = parseComposition(argA);
    TruncSeries s = exBasis == "F" ? expandF(a, exVars) : expandM(a, exVars);
    emit(printSeries(s), jsonSeries(s));
  });

  std::size_t ocLen = 3, ocVars = 0;
  unsigned long ocEntry = 2;
  auto* oc = app.add_subcommand("oracle-check",
                                "compare the algebraic product against series multiplication");
  oc->add_option("--max-len", ocLen)->capture_default_str();
  oc->add_option("--max-entry", ocEntry)->capture_default_str();
  oc->add_option("--vars", ocVars, "variable count; 0 = length sum per pair")->capture_default_str();
  addJsonFlag(oc);
  oc->callback([&] {
    auto comps = enumerateCompositions(ocLen, ocEntry);
    unsigned long pairs = 0, bad = 0;
    for (const auto& a : comps)
      for (const auto& b : comps) {
        ++pairs;
        std::size_t n = ocVars ? ocVars : a.length() + b.length();
        if (!oracleProductCheck(a, b, n)) ++bad;
      }
    std::string text = "oracle product check: " + std::string(bad == 0 ? "PASS" : "FAIL") + " (" +
                       std::to_string(pairs) + " pairs)";
    std::string json = "{\"pairs\":" + std::to_string(pairs) +
                       ",\"failures\":" + std::to_string(bad) +
                       ",\"pass\":" + (bad == 0 ? "true" : "false") + "}";
    emit(text, json);
    if (bad != 0) gRc = 1;
  });

  unsigned wVars = 0, wOrder = 0;
  auto* wr = app.add_subcommand("waring", "power-sum / elementary generating identity check");
  wr->add_option("--vars", wVars)->required();
  wr->add_option("--order", wOrder, "truncation order in t")->required();
  addJsonFlag(wr);
  wr->callback([&] {
    bool pass = waringCheck(wVars, wOrder);
    std::string text = "waring identity: " + std::string(pass ? "PASS" : "FAIL") + " (m=" +
                       std::to_string(wVars) + ", K=" + std::to_string(wOrder) + ")";
    std::string json = std::string("{\"vars\":") + std::to_string(wVars) +
                       ",\"order\":" + std::to_string(wOrder) +
                       ",\"pass\":" + (pass ? "true" : "false") + "}";
    emit(text, json);
    if (!pass) gRc = 1;
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int r = app.exit(e);
    return r == 0 ? 0 : 2;
  } catch (const ParseError& e) {
    std::cerr << "parse error at position " << e.pos + 1 << ": " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return gRc;
}
