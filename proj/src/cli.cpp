#include "cox/cli.hpp"

#include <algorithm>
#include <fstream>
#include <iostream>
#include <iterator>
#include <limits>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "cox/errors.hpp"
#include "cox/geometry.hpp"
#include "cox/involutions.hpp"
#include "cox/modtwo.hpp"
#include "cox/symbol.hpp"
#include "cox/torsionfree.hpp"
#include "cox/weyl.hpp"

namespace cox {

namespace {

using Json = nlohmann::ordered_json;

Json integer_json(const BigInt& z) {
  if (z <= std::numeric_limits<std::int64_t>::max() && z >= std::numeric_limits<std::int64_t>::min())
    return static_cast<std::int64_t>(z);
  return z.str();
}

Json rational_json(const Rational& r) {
  return Json{{"num", integer_json(numerator(r))}, {"den", integer_json(denominator(r))}};
}

Json pi_json(const PiMonomial& m) {
  Json j = rational_json(m.coeff);
  j["pi_power"] = m.power;
  return j;
}

Json matrix_json(const IntMatrix& m) {
  Json rows = Json::array();
  for (int i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (int j = 0; j < m.cols(); ++j) row.push_back(m(i, j));
    rows.push_back(row);
  }
  return rows;
}

Json names_json(const CoxeterSymbol& g, NodeSet set) {
  Json out = Json::array();
  for (int v : set.members()) out.push_back(g.name(v));
  return out;
}

struct Options {
  std::string file;
  bool json_only = false;
  bool quiet = false;
};

struct Context {
  Options opt;
  std::ostream& out;
  std::ostream& err;
  std::istream& in;

  std::string read_input(const std::string& path) const {
    const std::string& p = path.empty() ? opt.file : path;
    if (p.empty() || p == "-") return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
    std::ifstream f(p);
    if (!f) throw InputError("cannot open " + p);
    return {std::istreambuf_iterator<char>(f), std::istreambuf_iterator<char>()};
  }

  void emit(const Json& j) const { out << j.dump(2) << "\n"; }
  bool tables() const { return !opt.quiet && !opt.json_only; }
};

WeylData parse_type(const std::vector<std::string>& parts) {
  std::string joined;
  for (const auto& p : parts) joined += (joined.empty() ? "" : " ") + p;
  return weyl_data(std::string_view(joined));
}

std::vector<int> zero_based(const std::vector<int>& nodes, int rank) {
  std::vector<int> out;
  for (int v : nodes) {
    if (v < 1 || v > rank) throw InputError("node " + std::to_string(v) + " out of range 1.." + std::to_string(rank));
    out.push_back(v - 1);
  }
  return out;
}

Json dagger_json(const DaggerSymbol& d) {
  Json atts = Json::array();
  for (const auto& a : d.attachments()) {
    atts.push_back(Json{{"node", a.node + 1},
                        {"kind", a.kind == AttachmentKind::Plain ? "plain" : "special"},
                        {"weight", a.weight.coords},
                        {"reduced", a.reduced.to_string()}});
  }
  return Json{{"psi", d.psi().name()}, {"n", d.n()},         {"m", d.m()},
              {"ell", d.ell()},        {"attachments", atts}, {"gamma", Json::parse(serialize_symbol(d.gamma()))}};
}

int emit_certificate(const Context& ctx, const Certificate& c, const std::string& variant = "") {
  Json j = Json::parse(certificate_json(c));
  if (!variant.empty()) j["variant"] = variant;
  ctx.emit(j);
  if (ctx.tables()) {
    for (const auto& s : c.steps) ctx.err << (s.ok ? "  ok    " : "  FAIL  ") << s.name << "\n";
    ctx.err << c.kind << ": " << (c.ok() ? "all steps ok" : "some steps failed") << ", index " << c.index
            << ", p " << c.p << "\n";
  }
  return c.ok() ? 0 : 1;
}

CLI::App* verb(CLI::App* parent, const std::string& name, const std::string& help) {
  CLI::App* s = parent->add_subcommand(name, help);
  s->fallthrough();
  return s;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err, std::istream& in) {
  Context ctx{{}, out, err, in};
  CLI::App app{"Coxeter group toolkit: Weyl data, mod-2 lattices, torsion-free subgroups, volumes", "coxtool"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("--file", ctx.opt.file, "read input JSON from this file instead of stdin");
  app.add_flag("--json", ctx.opt.json_only, "print JSON only (no tables on stderr)");
  app.add_flag("--quiet", ctx.opt.quiet, "suppress tables on stderr");

  int code = 0;
  std::function<int()> action;

  // symbol
  CLI::App* symbol = verb(&app, "symbol", "Coxeter symbol queries on JSON input");
  symbol->require_subcommand(1);
  verb(symbol, "classify", "finite-type recognition")->callback([&] {
    action = [&] {
      CoxeterSymbol g = parse_symbol(ctx.read_input(""));
      Json comps = Json::array();
      bool finite = true;
      for (NodeSet c : connected_components(g)) {
        auto rc = recognize_component(g, c);
        Json entry{{"nodes", names_json(g, c)}};
        if (rc) {
          entry["type"] = rc->type.name();
          entry["order"] = integer_json(rc->type.order);
        } else {
          finite = false;
          entry["type"] = nullptr;
        }
        comps.push_back(entry);
      }
      Json j{{"finite", finite}, {"components", comps}};
      j["order"] = finite ? integer_json(finite_order(g)) : Json(nullptr);
      ctx.emit(j);
      if (ctx.tables())
        for (const auto& c : comps)
          err << (c["type"].is_null() ? std::string("not finite") : c["type"].get<std::string>()) << "  "
              << c["nodes"].dump() << "\n";
      return 0;
    };
  });
  verb(symbol, "euler", "Euler characteristic")->callback([&] {
    action = [&] {
      CoxeterSymbol g = parse_symbol(ctx.read_input(""));
      Rational chi = euler_characteristic(g);
      ctx.emit(Json{{"euler", rational_json(chi)}});
      if (ctx.tables()) err << "chi = " << to_string(chi) << "\n";
      return 0;
    };
  });
  double inf_value = -1.0;
  CLI::App* sig = verb(symbol, "signature", "eigenvalue signs of the cosine matrix");
  sig->add_option("--inf", inf_value, "value used for infinite labels (<= -1)");
  sig->callback([&] {
    action = [&] {
      CoxeterSymbol g = parse_symbol(ctx.read_input(""));
      Signature s = signature(g, inf_value);
      ctx.emit(Json{{"positive", s.positive}, {"negative", s.negative}, {"zero", s.zero}});
      if (ctx.tables()) err << "(" << s.positive << ", " << s.negative << ", " << s.zero << ")\n";
      return 0;
    };
  });

  // weyl
  std::vector<std::string> type_parts;
  CLI::App* weyl = verb(&app, "weyl", "Weyl group data");
  weyl->require_subcommand(1);
  CLI::App* info = verb(weyl, "info", "Cartan matrix, exponents, Coxeter number, order");
  info->add_option("type", type_parts, "family and rank, e.g. A 4 or E6")->required()->expected(1, 2);
  info->callback([&] {
    action = [&] {
      WeylData w = parse_type(type_parts);
      Json j{{"type", w.name()},
             {"cartan", matrix_json(w.cartan)},
             {"exponents", w.exponents},
             {"h", w.coxeter_number},
             {"order", w.order},
             {"minus_one_type", w.minus_one_type},
             {"index_of_connection", w.index_of_connection}};
      ctx.emit(j);
      if (ctx.tables())
        err << w.name() << ": |W| = " << w.order << ", h = " << w.coxeter_number << ", exponents "
            << j["exponents"].dump() << "\n";
      return 0;
    };
  });

  // modtwo
  CLI::App* modtwo = verb(&app, "modtwo", "weight vectors and admissibility over F2");
  modtwo->require_subcommand(1);
  int node = 0;
  CLI::App* weight = verb(modtwo, "weight", "primitive weight vector of a node");
  weight->add_option("type", type_parts, "family and rank")->required()->expected(1, 2);
  weight->add_option("--node", node, "node (1-based)")->required();
  weight->callback([&] {
    action = [&] {
      WeylData w = parse_type(type_parts);
      int s = zero_based({node}, w.rank)[0];
      WeightVector u = weight_vector(w, s);
      Json j{{"type", w.name()},
             {"node", node},
             {"u", u.coords},
             {"reduced", u.reduced().to_string()},
             {"lambda_dim", lambda_dim(w, s)},
             {"admissible", is_admissible(w, s)},
             {"specially_admissible", is_specially_admissible(w, s)}};
      ctx.emit(j);
      if (ctx.tables()) err << "u = " << j["u"].dump() << ", mod 2 " << j["reduced"].get<std::string>() << "\n";
      return 0;
    };
  });
  CLI::App* adm = verb(modtwo, "admissible", "admissible nodes with plain/special tags");
  adm->add_option("type", type_parts, "family and rank")->required()->expected(1, 2);
  adm->callback([&] {
    action = [&] {
      WeylData w = parse_type(type_parts);
      Json nodes = Json::array();
      for (int s = 0; s < w.rank; ++s)
        if (is_admissible(w, s))
          nodes.push_back(Json{{"node", s + 1}, {"tag", is_specially_admissible(w, s) ? "special" : "plain"}});
      ctx.emit(Json{{"type", w.name()}, {"nodes", nodes}});
      if (ctx.tables()) {
        err << w.name() << " admissible:";
        for (const auto& e : nodes) err << " " << e["node"].get<int>() << "(" << e["tag"].get<std::string>() << ")";
        err << "\n";
      }
      return 0;
    };
  });
  CLI::App* dpsi = verb(modtwo, "dpsi", "ker/im of the half Coxeter power plus one");
  dpsi->add_option("type", type_parts, "family and rank")->required()->expected(1, 2);
  dpsi->callback([&] {
    action = [&] {
      WeylData w = parse_type(type_parts);
      DPsi d = d_psi(w);
      ctx.emit(Json{{"type", w.name()}, {"h", d.h}, {"ker", d.ker_dim}, {"im", d.im_dim}, {"d", d.d}});
      if (ctx.tables()) err << w.name() << ": h = " << d.h << ", ker " << d.ker_dim << ", im " << d.im_dim << ", d = " << d.d << "\n";
      return 0;
    };
  });

  // involutions
  std::string symbol_file;
  CLI::App* inv = verb(&app, "involutions", "involution classes via (-1)-type subsymbols");
  inv->require_subcommand(1);
  CLI::App* classes = verb(inv, "classes", "equivalence classes of (-1)-type subsymbols");
  classes->add_option("--symbol", symbol_file, "symbol JSON file (default: --file or stdin)");
  classes->callback([&] {
    action = [&] {
      CoxeterSymbol g = parse_symbol(ctx.read_input(symbol_file));
      Json list = Json::array();
      for (const auto& c : equivalence_classes(g)) {
        Json members = Json::array();
        for (NodeSet m : c.members) members.push_back(names_json(g, m));
        list.push_back(Json{{"rank", c.rank}, {"members", members}});
      }
      ctx.emit(Json{{"classes", list}});
      if (ctx.tables())
        for (const auto& c : list)
          err << "rank " << c["rank"].get<int>() << ": " << c["members"].dump() << "\n";
      return 0;
    };
  });

  // tf
  std::vector<std::string> psi_parts;
  std::vector<int> attach;
  std::string mode_text = "hat";
  CLI::App* tf = verb(&app, "tf", "dagger symbols, torsion-free certificates, cyclic extensions");
  tf->require_subcommand(1);
  auto dagger_options = [&](CLI::App* s) {
    s->add_option("--psi", psi_parts, "Weyl type, e.g. E6 or E 6")->required()->expected(1, 2);
    s->add_option("--nodes", attach, "attachment nodes (1-based)")->required()->expected(1, -1);
  };
  auto make_dagger = [&] {
    WeylData w = parse_type(psi_parts);
    return build_dagger(w, zero_based(attach, w.rank));
  };
  CLI::App* build = verb(tf, "build", "build the dagger symbol");
  dagger_options(build);
  build->callback([&] {
    action = [&] {
      DaggerSymbol d = make_dagger();
      ctx.emit(dagger_json(d));
      if (ctx.tables())
        err << d.psi().name() << " with " << d.m() << " pendant(s), " << d.ell() << " plain; kernel index (hat) "
            << kernel_index_formula(d, PhiMode::Hat) << "\n";
      return 0;
    };
  });
  CLI::App* certify = verb(tf, "certify", "torsion-free certificate for the kernel");
  dagger_options(certify);
  certify->add_option("--mode", mode_text, "plain or hat")->check(CLI::IsMember({"plain", "hat"}));
  certify->callback([&] {
    action = [&] {
      DaggerSymbol d = make_dagger();
      return emit_certificate(ctx, certify_torsion_free(d, mode_text == "hat" ? PhiMode::Hat : PhiMode::Plain));
    };
  });
  CLI::App* extend = verb(tf, "extend", "cyclic extension of the hat kernel");
  dagger_options(extend);
  extend->callback([&] {
    action = [&] {
      CyclicExtension ext = cyclic_extension(make_dagger());
      return emit_certificate(ctx, ext.cert, ext.variant);
    };
  });

  // geometry
  int dim = 0;
  std::string route = "siegel";
  CLI::App* geo = verb(&app, "geometry", "covolumes and manifold volumes");
  geo->require_subcommand(1);
  CLI::App* volume = verb(geo, "volume", "volume of the torsion-free quotient manifold");
  volume->add_option("n", dim, "dimension (4, 6 or 8)")->required();
  volume->callback([&] {
    action = [&] {
      ManifoldVolume v = manifold_volume(dim);
      ctx.emit(Json{{"n", dim},
                    {"vol", pi_json(v.vol)},
                    {"chi", rational_json(v.chi)},
                    {"index", integer_json(v.index)},
                    {"deck", integer_json(v.deck)},
                    {"p", v.p}});
      if (ctx.tables())
        err << "n = " << dim << ": vol = " << v.vol.to_string() << ", chi = " << to_string(v.chi) << ", index "
            << v.index << ", deck " << v.deck << "\n";
      return 0;
    };
  });
  CLI::App* covol = verb(geo, "covol", "covolume of the Vinberg simplex group");
  covol->add_option("--route", route, "siegel or gb")->check(CLI::IsMember({"siegel", "gb"}));
  covol->add_option("--dim", dim, "even dimension 4, 6 or 8")->required();
  covol->callback([&] {
    action = [&] {
      PiMonomial c = route == "siegel" ? covolume_siegel(dim) : covolume_gauss_bonnet(vinberg_symbol(dim).gamma, dim);
      ctx.emit(Json{{"route", route}, {"dim", dim}, {"covol", pi_json(c)}});
      if (ctx.tables()) err << route << " covolume (n = " << dim << "): " << c.to_string() << "\n";
      return 0;
    };
  });
  CLI::App* vin = verb(geo, "vinberg", "the simplex symbol of dimension n");
  vin->add_option("n", dim, "dimension 4..9")->required();
  vin->callback([&] {
    action = [&] {
      VinbergSymbol v = vinberg_symbol(dim);
      ctx.emit(Json{{"n", dim}, {"attachment", v.attachment + 1}, {"has_dagger", v.dagger.has_value()},
                    {"gamma", Json::parse(serialize_symbol(v.gamma))}});
      if (ctx.tables()) err << "n = " << dim << ": pendant at node " << v.attachment + 1 << "\n";
      return 0;
    };
  });

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(std::move(reversed));
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      out << app.help();
      return 0;
    }
    err << "error: " << e.what() << "\n";
    return 2;
  }
  try {
    code = action ? action() : 2;
  } catch (const InputError& e) {
    err << "input error: " << e.what() << "\n";
    return 2;
  } catch (const nlohmann::json::exception& e) {
    err << "input error: " << e.what() << "\n";
    return 2;
  } catch (const CheckFailure& e) {
    err << "check failed: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
  return code;
}

}  // namespace cox
