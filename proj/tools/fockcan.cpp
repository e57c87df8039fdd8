#include "CLI11.hpp"

#include "fockcan/json_io.hpp"

#include <iostream>

using namespace fockcan;

namespace {

struct Common {
  std::string sig_text;
  std::string format = "json";
  int radius = 8;
  std::size_t max_states = 0;
};

void add_common(CLI::App* sub, Common& c, bool with_sig = true) {
  if (with_sig)
    sub->add_option("--sig", c.sig_text,
                    "signature, e.g. '2,1|2' (super) or '1,1+6' (classical)")
        ->required();
  sub->add_option("--format", c.format, "output format")
      ->check(CLI::IsMember({"json", "text"}));
  sub->add_option("--radius", c.radius, "value radius around the reference weight");
  sub->add_option("--max-states", c.max_states,
                  "state cap for order exploration (0 reads FOCKCAN_MAX_WINDOW)");
}

EngineOptions options_of(const Common& c) {
  EngineOptions opt;
  opt.radius = c.radius;
  opt.max_states = c.max_states;
  return opt;
}

void print_vector(const Common& c, const FockVector& v) {
  if (c.format == "json") {
    std::cout << vector_json(v).dump(2) << "\n";
    return;
  }
  for (const auto& [g, coeff] : v.terms())
    std::cout << coeff.str() << "  " << weight_str(v.sig(), g) << "\n";
}

int run_selftest() {
  int failures = 0;
  auto check = [&](const std::string& name, bool ok) {
    std::cout << (ok ? "PASS" : "FAIL") << "  " << name << "\n";
    if (!ok) ++failures;
  };
  {
    Signature sig = Signature::parse("1|1");
    FockVector expect(sig);
    expect.add({1, 1}, Laurent(1));
    expect.add({0, 0}, Laurent::q());
    check("generator action on a two factor space",
          apply_step(FockVector::monomial(sig, {0, 1}), OpStep{Gen::F, 0, 1}) == expect);
  }
  {
    Signature sig = Signature::parse("1,1|1");
    Engine eng(sig, {0, 0, 0});
    FockVector expect(sig);
    expect.add({0, 0, 0}, Laurent(1));
    expect.add({0, -1, -1}, Laurent::q());
    expect.add({-1, 0, -1}, Laurent::q(2));
    check("canonical vector of the smallest singular weight",
          eng.canonical({0, 0, 0}) == expect);
    check("reduction route agrees",
          eng.canonical_by_reduction({0, 0, 0}) == expect);
  }
  {
    Signature sig = Signature::parse("1,1|1");
    Engine eng(sig, {5, 1, 2});
    auto win = eng.window({5, 1, 2});
    auto r = eng.bar_matrix(win);
    const int k = static_cast<int>(win.size());
    bool ok = true;
    for (int i = 0; i < k && ok; ++i) {
      for (int j = 0; j < k && ok; ++j) {
        Laurent s;
        for (int t = 0; t < k; ++t) s += r.at(i, t) * r.at(t, j).bar();
        ok = s == (i == j ? Laurent(1) : Laurent());
      }
    }
    check("bar involution matrix squares to the identity", ok);
  }
  return failures == 0 ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact canonical bases in blocked Fock spaces and module multiplicity tables"};
  app.require_subcommand(1);

  Common c_canon, c_dual, c_bar, c_order, c_flag, c_block, c_dc;
  std::string w_canon, w_dual, w_bar, w_left, w_right, w_flag, l_flag, kind_text;
  std::string method = "auto";
  int bound = 5;
  std::string dc_neg, dc_head;
  int dc_cn = 0, dc_sn = 0;

  auto* canon = app.add_subcommand("canon", "canonical basis vector of a dominant weight");
  add_common(canon, c_canon);
  canon->add_option("--weight", w_canon, "dominant weight, blocks separated by '|'")->required();
  canon->add_option("--method", method, "construction route")
      ->check(CLI::IsMember({"auto", "closed", "reduction"}));

  auto* dual = app.add_subcommand("dual", "dual canonical basis vector");
  add_common(dual, c_dual);
  dual->add_option("--weight", w_dual, "dominant weight")->required();

  auto* bar = app.add_subcommand("bar", "bar invariant vector before sign normalization");
  add_common(bar, c_bar);
  bar->add_option("--weight", w_bar, "dominant weight")->required();

  auto* order = app.add_subcommand("order", "compare two weights in the Bruhat order");
  add_common(order, c_order);
  order->add_option("--left", w_left, "first weight")->required();
  order->add_option("--right", w_right, "second weight")->required();

  auto* flag = app.add_subcommand("flag", "multiplicity rows of a highest weight module");
  add_common(flag, c_flag);
  flag->add_option("--kind", kind_text, "tilting, verma, irreducible, or projective")
      ->required();
  flag->add_option("--weight", w_flag, "shifted weight, blocks separated by '|'");
  flag->add_option("--lambda", l_flag, "unshifted highest weight, blocks separated by '|'");

  auto* block = app.add_subcommand("block-report", "full principal block structure report");
  add_common(block, c_block, false);
  block->add_option("--bound", bound, "value bound for block members");

  auto* dc = app.add_subcommand("duality-check",
                                "compare classical and super triangular coefficients");
  add_common(dc, c_dc, false);
  dc->add_option("--neg", dc_neg, "negative block sizes, e.g. '1,1'")->required();
  dc->add_option("--classical-n", dc_cn, "classical positive block size")->required();
  dc->add_option("--super-n", dc_sn, "super positive block size")->required();
  dc->add_option("--head", dc_head, "classical head weight")->required();

  app.add_subcommand("selftest", "run built in sanity checks");

  try {
    app.parse(argc, argv);

    if (canon->parsed()) {
      Signature sig = Signature::parse(c_canon.sig_text);
      Weight f = parse_weight(sig, w_canon);
      Engine eng(sig, f, options_of(c_canon));
      if (method == "closed")
        print_vector(c_canon, eng.canonical_closed_form(f));
      else if (method == "reduction")
        print_vector(c_canon, eng.canonical_by_reduction(f));
      else
        print_vector(c_canon, eng.canonical(f));
    } else if (dual->parsed()) {
      Signature sig = Signature::parse(c_dual.sig_text);
      Weight f = parse_weight(sig, w_dual);
      Engine eng(sig, f, options_of(c_dual));
      print_vector(c_dual, eng.dual_canonical(f));
    } else if (bar->parsed()) {
      Signature sig = Signature::parse(c_bar.sig_text);
      Weight f = parse_weight(sig, w_bar);
      Engine eng(sig, f, options_of(c_bar));
      print_vector(c_bar, eng.bar_invariant(f));
    } else if (order->parsed()) {
      Signature sig = Signature::parse(c_order.sig_text);
      Weight a = parse_weight(sig, w_left), b = parse_weight(sig, w_right);
      Engine eng(sig, a, options_of(c_order));
      bool ab = eng.order().leq(a, b), ba = eng.order().leq(b, a);
      if (c_order.format == "json") {
        nlohmann::json o{{"left", weight_str(sig, a)},
                         {"right", weight_str(sig, b)},
                         {"left_below_right", ab},
                         {"right_below_left", ba}};
        std::cout << o.dump(2) << "\n";
      } else {
        std::cout << "left <= right: " << (ab ? "yes" : "no") << "\n"
                  << "right <= left: " << (ba ? "yes" : "no") << "\n";
      }
    } else if (flag->parsed()) {
      Signature sig = Signature::parse(c_flag.sig_text);
      if (w_flag.empty() == l_flag.empty())
        throw Error("Parse", "give exactly one of --weight and --lambda");
      Weight f = w_flag.empty()
                     ? weight_from_lambda(sig, parse_weight(sig, l_flag))
                     : parse_weight(sig, w_flag);
      FlagReport rep = character_flag(sig, parse_flag_kind(kind_text), f, options_of(c_flag));
      if (c_flag.format == "json") {
        std::cout << flag_report_json(rep).dump(2) << "\n";
      } else {
        std::cout << flag_kind_str(rep.kind) << " " << weight_str(sig, rep.head)
                  << (rep.proven ? "" : "  (conjectural)") << "\n";
        for (const auto& r : rep.rows)
          std::cout << r.mult.str() << "  " << weight_str(sig, r.f) << "\n";
      }
    } else if (block->parsed()) {
      std::cout << gl21_block_report(bound, options_of(c_block)).dump(2) << "\n";
    } else if (dc->parsed()) {
      Signature csig(Signature::parse(dc_neg + "+" + std::to_string(dc_cn)));
      Weight head = parse_weight(csig, dc_head);
      DualityReport rep =
          duality_check(csig.neg_blocks(), dc_cn, dc_sn, head, options_of(c_dc));
      if (c_dc.format == "json") {
        std::cout << duality_report_json(rep).dump(2) << "\n";
      } else {
        std::cout << (rep.ok() ? "OK" : "MISMATCH") << "  window " << rep.window_size
                  << ", pairs " << rep.pairs_checked << "\n";
        for (const auto& m : rep.mismatches)
          std::cout << "  at super row " << weight_str(rep.super_sig, m.super_row) << "\n";
      }
    } else {
      return run_selftest();
    }
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  } catch (const Error& e) {
    nlohmann::json err{{"error", e.code()}, {"detail", e.what()}};
    std::cout << err.dump(2) << "\n";
    return 1;
  }
  return 0;
}
