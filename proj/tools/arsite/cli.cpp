#include "arsite/cli.hpp"

#include <fstream>
#include <functional>
#include <iostream>
#include <iterator>
#include <sstream>

#include <CLI11.hpp>

#include "arsite/composition.hpp"
#include "arsite/figure.hpp"
#include "arsite/instances.hpp"
#include "arsite/io.hpp"
#include "arsite/newton.hpp"
#include "arsite/semigroup.hpp"

namespace arsite::cli {

namespace {

using io::json;

class Context {
 public:
  Context(std::istream& in, std::ostream& out) : in_(in), out_(out) {}

  std::string read_text(const std::string& path) {
    if (path.empty() || path == "-") {
      if (stdin_used_) throw ParseError("standard input can only be read once");
      stdin_used_ = true;
      return {std::istreambuf_iterator<char>(in_), std::istreambuf_iterator<char>()};
    }
    std::ifstream file(path, std::ios::binary);
    if (!file) throw ParseError("cannot open \"" + path + "\"");
    return {std::istreambuf_iterator<char>(file), std::istreambuf_iterator<char>()};
  }

  json read_json(const std::string& path) {
    const std::string text = read_text(path);
    try {
      return json::parse(text);
    } catch (const json::exception& e) {
      throw ParseError(std::string("invalid JSON: ") + e.what());
    }
  }

  void emit(const json& j) { out_ << j.dump() << '\n'; }
  std::ostream& out() { return out_; }

 private:
  std::istream& in_;
  std::ostream& out_;
  bool stdin_used_ = false;
};

QMax parse_tropical(const std::string& text) {
  if (text == "inf") return QMax::zero();
  return QMax::power(io::parse_scalar(text));
}

FigureLayers parse_layers(const std::string& text) {
  FigureLayers layers{false, false, false, false};
  std::stringstream list(text);
  std::string item;
  while (std::getline(list, item, ',')) {
    if (item == "region") layers.region = true;
    else if (item == "hull") layers.hull = true;
    else if (item == "mu") layers.mu_line = true;
    else if (item == "lambda") layers.lambda_line = true;
    else throw ParseError("unknown layer \"" + item + "\"");
  }
  return layers;
}

json rows_json(const BitMatrix& m) {
  json rows = json::array();
  for (std::size_t y = m.window(); y-- > 0;) {
    std::string row;
    for (std::size_t x = 0; x < m.window(); ++x) row += m.at(x, y) ? '1' : '0';
    rows.push_back(row);
  }
  return {{"window", m.window()}, {"rows", rows}};
}

struct Options {
  std::string input = "-";
  std::string lhs, rhs, third;
  std::string lambda, lambda2, x = "1", y = "1", r;
  Natural n = 1, m = 1;
  std::optional<Natural> check;
  bool gaps = false;
  std::size_t depth = 8;
  std::size_t window = 0;
  std::optional<Natural> verify_bound;
  std::size_t iters = 1000;
  std::uint64_t seed = 0;
  std::string instance;
  std::string layers = "region,hull,mu,lambda";
  std::string output;
};

void add_binary(CLI::App* sub, Options& o) {
  sub->add_option("--lhs", o.lhs, "Left operand JSON file ('-' for stdin)")->required();
  sub->add_option("--rhs", o.rhs, "Right operand JSON file ('-' for stdin)")->required();
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact arithmetic on the arithmetic site", "arsite"};
  app.require_subcommand(1);
  Options o;
  Context ctx(in, out);
  std::function<void()> action;

  // hereditary
  CLI::App* her = app.add_subcommand("hereditary", "Operations on Sub>=(N x N)");
  her->require_subcommand(1);
  {
    CLI::App* s = her->add_subcommand("add", "Union of two hereditary sets");
    add_binary(s, o);
    s->callback([&] {
      action = [&] { ctx.emit(io::to_json(add(io::hereditary_from_json(ctx.read_json(o.lhs)),
                                              io::hereditary_from_json(ctx.read_json(o.rhs))))); };
    });
    s = her->add_subcommand("mul", "Product of two hereditary sets");
    add_binary(s, o);
    s->callback([&] {
      action = [&] { ctx.emit(io::to_json(mul(io::hereditary_from_json(ctx.read_json(o.lhs)),
                                              io::hereditary_from_json(ctx.read_json(o.rhs))))); };
    });
    s = her->add_subcommand("canonicalize", "Minimal generators of the up-closure");
    s->add_option("--input", o.input);
    s->callback([&] { action = [&] { ctx.emit(io::to_json(io::hereditary_from_json(ctx.read_json(o.input)))); }; });
    s = her->add_subcommand("frobenius", "Fr_{n,m}");
    s->add_option("--input", o.input);
    s->add_option("--n", o.n)->required();
    s->add_option("--m", o.m)->required();
    s->callback([&] {
      action = [&] { ctx.emit(io::to_json(frobenius(io::hereditary_from_json(ctx.read_json(o.input)), o.n, o.m))); };
    });
    s = her->add_subcommand("mu", "Image under the product morphism");
    s->add_option("--input", o.input);
    s->callback([&] {
      action = [&] { ctx.emit({{"mu", io::to_json(mu(io::hereditary_from_json(ctx.read_json(o.input))))}}); };
    });
    s = her->add_subcommand("m_r", "min of r a + b over generators");
    s->add_option("--input", o.input);
    s->add_option("--r", o.r)->required();
    s->callback([&] {
      action = [&] {
        const ExactScalar r = io::parse_scalar(o.r);
        if (!r.is_rational()) throw ParseError("m_r needs a rational r");
        ctx.emit({{"alpha", io::to_json(m_r(io::hereditary_from_json(ctx.read_json(o.input)), r.rational_part()))}});
      };
    });
    s = her->add_subcommand("rasterize", "Membership table of a window, top row first");
    s->add_option("--input", o.input);
    s->add_option("--window", o.window)->required();
    s->callback([&] {
      action = [&] { ctx.emit(rows_json(rasterize(io::hereditary_from_json(ctx.read_json(o.input)), o.window))); };
    });
  }

  // newton
  CLI::App* newt = app.add_subcommand("newton", "Operations on Conv>=(N x N)");
  newt->require_subcommand(1);
  {
    CLI::App* s = newt->add_subcommand("add", "Convex hull of the union");
    add_binary(s, o);
    s->callback([&] {
      action = [&] { ctx.emit(io::to_json(hull_add(io::newton_from_json(ctx.read_json(o.lhs)),
                                                   io::newton_from_json(ctx.read_json(o.rhs))))); };
    });
    s = newt->add_subcommand("mul", "Minkowski sum");
    add_binary(s, o);
    s->callback([&] {
      action = [&] { ctx.emit(io::to_json(minkowski_mul(io::newton_from_json(ctx.read_json(o.lhs)),
                                                        io::newton_from_json(ctx.read_json(o.rhs))))); };
    });
    s = newt->add_subcommand("gamma", "Newton polygon of a hereditary set");
    s->add_option("--input", o.input);
    s->callback([&] { action = [&] { ctx.emit(io::to_json(gamma(io::hereditary_from_json(ctx.read_json(o.input))))); }; });
    s = newt->add_subcommand("hull", "Newton polygon of arbitrary points {\"points\":[[a,b],...]}");
    s->add_option("--input", o.input);
    s->callback([&] {
      action = [&] {
        const json j = ctx.read_json(o.input);
        if (!j.is_object() || !j.contains("points")) throw ParseError("missing field \"points\"");
        const HereditarySet pts = io::hereditary_from_json({{"generators", j["points"]}});
        ctx.emit(io::to_json(gamma(pts)));
      };
    });
    s = newt->add_subcommand("universal-factor", "rho'(C) for X = q^x, Y = q^y");
    s->add_option("--input", o.input);
    s->add_option("--x", o.x, "Exponent of X, or inf");
    s->add_option("--y", o.y, "Exponent of Y, or inf");
    s->callback([&] {
      action = [&] {
        const QMax value = universal_factor(io::newton_from_json(ctx.read_json(o.input)), parse_tropical(o.x),
                                            parse_tropical(o.y));
        ctx.emit({{"exponent", io::to_json(value)}});
      };
    });
    s = newt->add_subcommand("cancellative", "Check P*S == R*S implies P == R");
    s->add_option("--p", o.lhs)->required();
    s->add_option("--r", o.rhs)->required();
    s->add_option("--s", o.third)->required();
    s->callback([&] {
      action = [&] {
        const NewtonPolygon p = io::newton_from_json(ctx.read_json(o.lhs));
        const NewtonPolygon r = io::newton_from_json(ctx.read_json(o.rhs));
        const NewtonPolygon s3 = io::newton_from_json(ctx.read_json(o.third));
        ctx.emit({{"cancellative", cancellativity_check(p, r, s3)}});
      };
    });
  }

  // semigroup
  {
    CLI::App* s = app.add_subcommand("semigroup", "The numerical semigroup <n, m>");
    s->add_option("--n", o.n)->required();
    s->add_option("--m", o.m)->required();
    auto* check = s->add_option("--check", o.check, "Whether C = n a + m b for some a, b in N");
    auto* gaps_flag = s->add_flag("--gaps", o.gaps, "List the gaps");
    check->excludes(gaps_flag);
    s->callback([&] {
      action = [&] {
        if (o.check) {
          ctx.emit({{"represents", in_range(o.n, o.m, *o.check)}});
          return;
        }
        const CoprimePair pair(o.n, o.m);
        json j = {{"n", o.n}, {"m", o.m}, {"conductor", conductor(pair)}};
        if (o.gaps) j["gaps"] = gaps(pair);
        ctx.emit(j);
      };
    });
  }

  // eval / iso / approx
  {
    CLI::App* s = app.add_subcommand("eval", "F(lambda, q)(E)");
    s->add_option("--lambda", o.lambda)->required();
    s->add_option("--input", o.input);
    s->callback([&] {
      action = [&] {
        const Lambda lambda = io::parse_lambda(o.lambda);
        ctx.emit(io::to_json(evaluate(lambda, io::hereditary_from_json(ctx.read_json(o.input)))));
      };
    });
    s = app.add_subcommand("iso", "Whether R(l1) and R(l2) are isomorphic");
    s->add_option("--l1", o.lambda)->required();
    s->add_option("--l2", o.lambda2)->required();
    s->callback([&] {
      action = [&] {
        const Lambda l1 = io::parse_lambda(o.lambda);
        const Lambda l2 = io::parse_lambda(o.lambda2);
        ctx.emit({{"isomorphic", iso_class(l1, l2)},
                  {"invariant_l1", io::to_json(iso_invariant(l1))},
                  {"invariant_l2", io::to_json(iso_invariant(l2))}});
      };
    });
    s = app.add_subcommand("approx", "Convergent approximations of F(lambda, q)(E)");
    s->add_option("--lambda", o.lambda)->required();
    s->add_option("--depth", o.depth);
    s->add_option("--input", o.input);
    s->callback([&] {
      action = [&] {
        const Lambda lambda = io::parse_lambda(o.lambda);
        const HereditarySet e = io::hereditary_from_json(ctx.read_json(o.input));
        const auto steps = approximate(lambda, e, o.depth);
        ctx.emit({{"alpha", io::to_json(evaluate(lambda, e).alpha())}, {"steps", io::to_json(steps)}});
      };
    });
  }

  // compose
  {
    CLI::App* s = app.add_subcommand("compose", "Psi(left) o Psi(right)");
    s->add_option("--left", o.lambda)->required();
    s->add_option("--right", o.lambda2)->required();
    s->add_option("--verify-bound", o.verify_bound, "Cross-check with witness coordinates up to B");
    s->callback([&] {
      action = [&] {
        const Lambda left = io::parse_lambda(o.lambda);
        const Lambda right = io::parse_lambda(o.lambda2);
        ctx.emit(io::to_json(compose(left, right, o.verify_bound)));
      };
    });
  }

  // axioms
  {
    CLI::App* s = app.add_subcommand("axioms", "Randomized semiring axiom suites");
    s->add_option("--iters", o.iters);
    s->add_option("--seed", o.seed);
    s->add_option("--instance", o.instance, "One of the standard instances (default: all)");
    s->callback([&] {
      action = [&] {
        json reports = json::array();
        if (o.instance.empty()) {
          for (const AxiomReport& r : run_standard_suites(o.iters, o.seed)) reports.push_back(r.to_json());
        } else {
          try {
            reports.push_back(run_standard_instance(o.instance, o.iters, o.seed).to_json());
          } catch (const std::invalid_argument& e) {
            throw ParseError(e.what());
          }
        }
        ctx.emit(reports);
      };
    });
  }

  // figure
  {
    CLI::App* s = app.add_subcommand("figure", "SVG drawing of a hereditary set");
    s->add_option("--input", o.input);
    s->add_option("--lambda", o.lambda);
    s->add_option("--window", o.window, "Window side (default: max coordinate + 2)");
    s->add_option("--layers", o.layers, "Comma list of region,hull,mu,lambda");
    s->add_option("--output", o.output, "SVG file (default: stdout)");
    s->callback([&] {
      action = [&] {
        FigureSpec spec;
        spec.layers = parse_layers(o.layers);
        spec.set = io::hereditary_from_json(ctx.read_json(o.input));
        if (!o.lambda.empty()) spec.lambda = io::parse_lambda(o.lambda);
        spec.window = o.window != 0 ? o.window : static_cast<std::size_t>(spec.set.max_coordinate()) + 2;
        const std::string svg = emit_figure(spec);
        if (o.output.empty()) {
          ctx.out() << svg;
        } else {
          std::ofstream file(o.output, std::ios::binary);
          if (!file) throw ParseError("cannot write \"" + o.output + "\"");
          file << svg;
        }
      };
    });
  }

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  try {
    if (action) action();
    return 0;
  } catch (const DomainError& e) {
    ctx.emit({{"error", std::string(to_string(e.code()))}, {"message", e.what()}});
    return 1;
  } catch (const ParseError& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::overflow_error& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  }
}

}  // namespace arsite::cli
