// Command-line surface over the shared-library C API.

#include <cinttypes>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <cstring>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "symbidisc/symbidisc.h"

namespace {

constexpr int exit_outside = 1;
constexpr int exit_boundary = 2;
constexpr int exit_usage = 64;
constexpr int exit_parameter = 65;
constexpr int exit_software = 70;
constexpr int exit_io = 74;

std::string fmt_real(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

std::string fmt_complex(sbd_complex z) {
  char buf[128];
  std::snprintf(buf, sizeof buf, "%.17g%+.17gi", z.re, z.im);
  return buf;
}

bool parse_real(const std::string& text, double& out) {
  if (text.empty()) return false;
  try {
    std::size_t used = 0;
    out = std::stod(text, &used);
    return used == text.size();
  } catch (const std::exception&) {
    return false;
  }
}

// Accepts "a+bi", "bi", "a", "i", "-i"; exponents allowed in both parts.
bool parse_complex(const std::string& token, sbd_complex& out) {
  std::string s = token;
  if (s.empty()) return false;
  if (s.back() == 'i' || s.back() == 'I') {
    const std::string body = s.substr(0, s.size() - 1);
    std::size_t split = 0;
    for (std::size_t j = body.size(); j-- > 1;) {
      if ((body[j] == '+' || body[j] == '-') && body[j - 1] != 'e' &&
          body[j - 1] != 'E') {
        split = j;
        break;
      }
    }
    std::string re_part = "0";
    std::string im_part = body;
    if (split > 0) {
      re_part = body.substr(0, split);
      im_part = body.substr(split);
    }
    if (im_part.empty() || im_part == "+") {
      out.im = 1.0;
    } else if (im_part == "-") {
      out.im = -1.0;
    } else if (!parse_real(im_part, out.im)) {
      return false;
    }
    return parse_real(re_part, out.re);
  }
  out.im = 0.0;
  return parse_real(s, out.re);
}

// A point is either one "a+bi" token per coordinate or 2*arity bare reals.
bool parse_point(const std::vector<std::string>& tokens, std::size_t arity,
                 std::vector<sbd_complex>& out) {
  out.clear();
  if (tokens.size() == arity) {
    for (const std::string& t : tokens) {
      sbd_complex z;
      if (!parse_complex(t, z)) return false;
      out.push_back(z);
    }
    return true;
  }
  if (tokens.size() == 2 * arity) {
    for (std::size_t k = 0; k < arity; ++k) {
      sbd_complex z;
      if (!parse_real(tokens[2 * k], z.re) ||
          !parse_real(tokens[2 * k + 1], z.im))
        return false;
      out.push_back(z);
    }
    return true;
  }
  return false;
}

const char* region_name(sbd_region r) {
  switch (r) {
    case SBD_REGION_INSIDE: return "Inside";
    case SBD_REGION_BOUNDARY: return "Boundary";
    case SBD_REGION_OUTSIDE: break;
  }
  return "Outside";
}

int region_exit(sbd_region r) {
  switch (r) {
    case SBD_REGION_INSIDE: return 0;
    case SBD_REGION_BOUNDARY: return exit_boundary;
    case SBD_REGION_OUTSIDE: break;
  }
  return exit_outside;
}

int status_exit(sbd_status status) {
  switch (status) {
    case SBD_OK: return 0;
    case SBD_ERR_INVALID_ARGUMENT:
    case SBD_ERR_UNKNOWN_SUITE: return exit_usage;
    case SBD_ERR_IO: return exit_io;
    case SBD_ERR_INTERNAL: return exit_software;
    default: return exit_parameter;
  }
}

int report_error(const sbd_context* ctx, sbd_status status) {
  const char* message = ctx != nullptr ? sbd_context_last_message(ctx) : "";
  if (message == nullptr || message[0] == '\0')
    message = sbd_status_name(status);
  std::fprintf(stderr, "error: %s (%s)\n", message, sbd_status_name(status));
  return status_exit(status);
}

struct domain_spec {
  const char* name;
  sbd_domain domain;
  std::size_t arity;
  std::size_t n_params;
};

const domain_spec k_domains[] = {
    {"G", SBD_DOMAIN_G, 2, 0},       {"D1", SBD_DOMAIN_D1, 2, 0},
    {"Ds", SBD_DOMAIN_DS, 2, 1},     {"Dst", SBD_DOMAIN_DST, 2, 2},
    {"Dc", SBD_DOMAIN_DC, 2, 1},     {"Gc", SBD_DOMAIN_GC, 2, 1},
    {"Omega1", SBD_DOMAIN_OMEGA1, 2, 0}, {"D21", SBD_DOMAIN_D21, 4, 0},
};

struct map_spec {
  const char* name;
  sbd_map map;
  int inverse; // index into the map enum, -1 if none
};

const map_spec k_maps[] = {
    {"F", SBD_MAP_F, SBD_MAP_FINV},
    {"Finv", SBD_MAP_FINV, SBD_MAP_F},
    {"H", SBD_MAP_H, SBD_MAP_HINV},
    {"Hinv", SBD_MAP_HINV, SBD_MAP_H},
    {"J", SBD_MAP_J, SBD_MAP_JINV},
    {"Jinv", SBD_MAP_JINV, SBD_MAP_J},
    {"sym", SBD_MAP_SYM, SBD_MAP_SYMINV},
    {"syminv", SBD_MAP_SYMINV, SBD_MAP_SYM},
    {"symOmega1", SBD_MAP_SYM_OMEGA1, -1},
    {"symD21", SBD_MAP_SYM_D21, -1},
};

double coord_gap(const std::vector<sbd_complex>& a,
                 const std::vector<sbd_complex>& b) {
  double worst = 0.0;
  for (std::size_t k = 0; k < a.size(); ++k)
    worst = std::max(worst, std::hypot(a[k].re - b[k].re, a[k].im - b[k].im));
  return worst;
}

double roundtrip_residual(sbd_map map, const std::vector<sbd_complex>& in,
                          const std::vector<sbd_complex>& back) {
  if (map == SBD_MAP_SYM) {
    const std::vector<sbd_complex> swapped = {in[1], in[0]};
    return std::min(coord_gap(in, back), coord_gap(swapped, back));
  }
  if (map == SBD_MAP_JINV) {
    // Projective comparison: scale both representatives by the input's
    // largest coordinate.
    std::size_t k = 0;
    for (std::size_t j = 1; j < 4; ++j)
      if (std::hypot(in[j].re, in[j].im) > std::hypot(in[k].re, in[k].im))
        k = j;
    auto scale = [k](const std::vector<sbd_complex>& v) {
      const double d = v[k].re * v[k].re + v[k].im * v[k].im;
      std::vector<sbd_complex> out(4);
      for (std::size_t j = 0; j < 4; ++j) {
        out[j].re = (v[j].re * v[k].re + v[j].im * v[k].im) / d;
        out[j].im = (v[j].im * v[k].re - v[j].re * v[k].im) / d;
      }
      return out;
    };
    return coord_gap(scale(in), scale(back));
  }
  return coord_gap(in, back);
}

int cmd_member(sbd_context* ctx, const std::string& domain_name,
               const std::vector<std::string>& tokens, int condition,
               const std::vector<double>& params) {
  const domain_spec* spec = nullptr;
  for (const domain_spec& d : k_domains)
    if (domain_name == d.name) spec = &d;
  if (spec == nullptr) {
    std::fprintf(stderr, "error: unknown domain '%s'\n", domain_name.c_str());
    return exit_usage;
  }
  std::vector<sbd_complex> coords;
  if (!parse_point(tokens, spec->arity, coords)) {
    std::fprintf(stderr, "error: expected %zu complex coordinates\n",
                 spec->arity);
    return exit_usage;
  }
  if (params.size() != spec->n_params) {
    std::fprintf(stderr, "error: domain %s takes %zu parameter(s)\n",
                 spec->name, spec->n_params);
    return exit_parameter;
  }

  sbd_region tri = SBD_REGION_OUTSIDE;
  double margin = 0.0;
  const sbd_status status = sbd_membership(
      ctx, spec->domain, coords.data(), coords.size(), condition,
      params.empty() ? nullptr : params.data(), params.size(), &tri, &margin);
  if (status != SBD_OK) return report_error(ctx, status);

  std::printf("domain=%s\n", spec->name);
  for (std::size_t k = 0; k < coords.size(); ++k)
    std::printf("coord_%zu=%s\n", k, fmt_complex(coords[k]).c_str());
  for (std::size_t k = 0; k < params.size(); ++k)
    std::printf("param_%zu=%s\n", k, fmt_real(params[k]).c_str());
  if (condition != 0) std::printf("condition=%d\n", condition);
  std::printf("tri=%s\n", region_name(tri));
  std::printf("margin=%s\n", fmt_real(margin).c_str());

  const bool nineway =
      spec->domain == SBD_DOMAIN_G || spec->domain == SBD_DOMAIN_D1;
  if (condition == 0 && nineway) {
    for (int c = 1; c <= 9; ++c) {
      sbd_region ctri = SBD_REGION_OUTSIDE;
      double cmargin = 0.0;
      const sbd_status cs =
          sbd_membership(ctx, spec->domain, coords.data(), coords.size(), c,
                         nullptr, 0, &ctri, &cmargin);
      if (cs != SBD_OK) return report_error(ctx, cs);
      std::printf("condition_%d_tri=%s\n", c, region_name(ctri));
      std::printf("condition_%d_margin=%s\n", c, fmt_real(cmargin).c_str());
    }
  }
  return region_exit(tri);
}

int cmd_map(sbd_context* ctx, const std::string& map_name,
            const std::vector<std::string>& tokens, bool roundtrip) {
  const map_spec* spec = nullptr;
  for (const map_spec& m : k_maps)
    if (map_name == m.name) spec = &m;
  if (spec == nullptr) {
    std::fprintf(stderr, "error: unknown map '%s'\n", map_name.c_str());
    return exit_usage;
  }
  std::size_t n_in = 0;
  std::size_t n_out = 0;
  sbd_map_arity(spec->map, &n_in, &n_out);
  std::vector<sbd_complex> in;
  if (!parse_point(tokens, n_in, in)) {
    std::fprintf(stderr, "error: expected %zu complex coordinates\n", n_in);
    return exit_usage;
  }
  if (roundtrip && spec->inverse < 0) {
    std::fprintf(stderr, "error: map %s has no inverse for --roundtrip\n",
                 spec->name);
    return exit_parameter;
  }

  std::vector<sbd_complex> out(n_out);
  const sbd_status status =
      sbd_map_apply(ctx, spec->map, in.data(), n_in, out.data(), n_out);
  if (status != SBD_OK) return report_error(ctx, status);

  std::printf("map=%s\n", spec->name);
  for (std::size_t k = 0; k < in.size(); ++k)
    std::printf("input_%zu=%s\n", k, fmt_complex(in[k]).c_str());
  for (std::size_t k = 0; k < out.size(); ++k)
    std::printf("image_%zu=%s\n", k, fmt_complex(out[k]).c_str());

  if (roundtrip) {
    const auto inv = static_cast<sbd_map>(spec->inverse);
    std::vector<sbd_complex> back(n_in);
    const sbd_status rs =
        sbd_map_apply(ctx, inv, out.data(), n_out, back.data(), n_in);
    if (rs != SBD_OK) return report_error(ctx, rs);
    for (std::size_t k = 0; k < back.size(); ++k)
      std::printf("roundtrip_%zu=%s\n", k, fmt_complex(back[k]).c_str());
    std::printf("roundtrip_residual=%s\n",
                fmt_real(roundtrip_residual(spec->map, in, back)).c_str());
  }
  return 0;
}

int cmd_orbit(sbd_context* ctx, double a, std::uint64_t n, std::uint64_t seed,
              const std::string& out_path) {
  if (n < 1) {
    std::fprintf(stderr, "error: n must be at least 1\n");
    return exit_parameter;
  }
  std::ofstream file;
  std::ostream* sink = &std::cout;
  if (!out_path.empty()) {
    file.open(out_path);
    if (!file) {
      std::fprintf(stderr, "error: cannot open '%s'\n", out_path.c_str());
      return exit_io;
    }
    sink = &file;
  }
  std::fprintf(stderr, "seed=%" PRIu64 "\n", seed);

  *sink << "s_re,s_im,p_re,p_im,leaf_a\n";
  for (std::uint64_t i = 0; i < n; ++i) {
    sbd_complex s, p;
    sbd_status status = sbd_sample_leaf(ctx, a, seed, i, &s, &p);
    if (status != SBD_OK) return report_error(ctx, status);
    double q = 0.0;
    status = sbd_leaf_index(ctx, s, p, &q);
    if (status != SBD_OK) return report_error(ctx, status);
    if (std::abs(q - a) > 1e-9) {
      std::fprintf(stderr,
                   "error: sampled point failed leaf verification (|%s - %s| > 1e-9)\n",
                   fmt_real(q).c_str(), fmt_real(a).c_str());
      return exit_software;
    }
    *sink << fmt_real(s.re) << ',' << fmt_real(s.im) << ',' << fmt_real(p.re)
          << ',' << fmt_real(p.im) << ',' << fmt_real(q) << '\n';
  }
  sink->flush();
  if (sink->fail()) {
    std::fprintf(stderr, "error: write failure\n");
    return exit_io;
  }
  return 0;
}

int cmd_levi(sbd_context* ctx, double a, double theta,
             const std::string& alpha_token, bool json) {
  sbd_complex alpha;
  if (!parse_complex(alpha_token, alpha)) {
    std::fprintf(stderr, "error: cannot parse alpha '%s'\n",
                 alpha_token.c_str());
    return exit_usage;
  }
  sbd_complex z1, z2;
  sbd_status status = sbd_disc_apply(theta, alpha, {a, 0.0}, &z1);
  if (status == SBD_OK) status = sbd_disc_apply(theta, alpha, {0.0, 0.0}, &z2);
  if (status != SBD_OK) {
    std::fprintf(stderr, "error: %s\n", sbd_status_name(status));
    return status_exit(status);
  }
  sbd_levi_report rep;
  status = sbd_levi_report_at(ctx, z1, z2, a, &rep);
  if (status != SBD_OK) return report_error(ctx, status);

  const double agreement = std::abs(rep.levi_value - rep.closed_form_value);
  if (json) {
    std::printf(
        "{\"a\":%s,\"theta\":%s,\"alpha\":\"%s\",\"z1\":\"%s\",\"z2\":\"%s\","
        "\"grad1\":\"%s\",\"grad2\":\"%s\",\"m11\":\"%s\",\"m12\":\"%s\","
        "\"m21\":\"%s\",\"m22\":\"%s\",\"tangent\":\"%s\",\"levi_value\":%s,"
        "\"closed_form_value\":%s,\"agreement\":%s}\n",
        fmt_real(a).c_str(), fmt_real(theta).c_str(),
        fmt_complex(alpha).c_str(), fmt_complex(rep.z1).c_str(),
        fmt_complex(rep.z2).c_str(), fmt_complex(rep.grad1).c_str(),
        fmt_complex(rep.grad2).c_str(), fmt_complex(rep.m11).c_str(),
        fmt_complex(rep.m12).c_str(), fmt_complex(rep.m21).c_str(),
        fmt_complex(rep.m22).c_str(), fmt_complex(rep.tangent).c_str(),
        fmt_real(rep.levi_value).c_str(),
        fmt_real(rep.closed_form_value).c_str(), fmt_real(agreement).c_str());
    return 0;
  }
  std::printf("a=%s\n", fmt_real(a).c_str());
  std::printf("theta=%s\n", fmt_real(theta).c_str());
  std::printf("alpha=%s\n", fmt_complex(alpha).c_str());
  std::printf("z1=%s\n", fmt_complex(rep.z1).c_str());
  std::printf("z2=%s\n", fmt_complex(rep.z2).c_str());
  std::printf("grad1=%s\n", fmt_complex(rep.grad1).c_str());
  std::printf("grad2=%s\n", fmt_complex(rep.grad2).c_str());
  std::printf("m11=%s\n", fmt_complex(rep.m11).c_str());
  std::printf("m12=%s\n", fmt_complex(rep.m12).c_str());
  std::printf("m21=%s\n", fmt_complex(rep.m21).c_str());
  std::printf("m22=%s\n", fmt_complex(rep.m22).c_str());
  std::printf("tangent=%s\n", fmt_complex(rep.tangent).c_str());
  std::printf("levi_value=%s\n", fmt_real(rep.levi_value).c_str());
  std::printf("closed_form_value=%s\n",
              fmt_real(rep.closed_form_value).c_str());
  std::printf("agreement=%s\n", fmt_real(agreement).c_str());
  return 0;
}

int cmd_verify(sbd_context* ctx, const std::string& suite, double scale,
               std::uint64_t n_override, std::uint64_t seed,
               const std::string& out_path) {
  if (!(scale > 0.0)) {
    std::fprintf(stderr, "error: --scale must be positive\n");
    return exit_parameter;
  }
  std::ofstream file;
  std::ostream* sink = &std::cout;
  if (!out_path.empty()) {
    file.open(out_path);
    if (!file) {
      std::fprintf(stderr, "error: cannot open '%s'\n", out_path.c_str());
      return exit_io;
    }
    sink = &file;
  }

  std::vector<std::string> names;
  if (suite == "all") {
    for (std::size_t k = 0; k < sbd_suite_count(); ++k)
      names.push_back(sbd_suite_name(k));
  } else {
    names.push_back(suite);
  }

  bool all_pass = true;
  for (const std::string& name : names) {
    std::uint64_t n = n_override;
    if (n == 0) {
      for (std::size_t k = 0; k < sbd_suite_count(); ++k) {
        if (name == sbd_suite_name(k)) {
          const double scaled =
              std::llround(static_cast<double>(sbd_suite_default_samples(k)) *
                           scale);
          n = static_cast<std::uint64_t>(std::max(2.0, scaled));
        }
      }
      if (n == 0) n = 1; // unknown name: let the library report it
    }
    sbd_suite_result result;
    const sbd_status status = sbd_verify_run(ctx, name.c_str(), n, seed, &result);
    if (status != SBD_OK) return report_error(ctx, status);

    char line[512];
    if (sbd_suite_result_to_json(&result, line, sizeof line, nullptr) != SBD_OK) {
      std::fprintf(stderr, "error: certificate serialization failed\n");
      return exit_software;
    }
    *sink << line << '\n';
    std::fprintf(stderr, "suite %s: %s in %.3f s\n", result.suite_name,
                 result.pass ? "pass" : "FAIL", result.elapsed_seconds);
    all_pass = all_pass && result.pass != 0;
  }
  sink->flush();
  if (sink->fail()) {
    std::fprintf(stderr, "error: write failure\n");
    return exit_io;
  }
  return all_pass ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"Geometry of the symmetrized bidisc and its unbounded models"};
  app.require_subcommand(1);

  std::string member_domain;
  std::vector<std::string> member_point;
  int member_condition = 0;
  std::vector<double> member_params;
  double param_s = 0.0, param_t = 0.0, param_c = 0.0;
  bool has_s = false, has_t = false, has_c = false;
  CLI::App* member = app.add_subcommand("member", "Domain membership query");
  member->add_option("domain", member_domain, "G, D1, Ds, Dst, Dc, Gc, Omega1, D21")
      ->required();
  member->add_option("point", member_point, "coordinates")->required();
  member->add_option("--condition", member_condition,
                     "single characterization (1..9, nine-way domains only)");
  member->add_option("--s", param_s, "family parameter s");
  member->add_option("--t", param_t, "family parameter t (inf accepted)");
  member->add_option("--c", param_c, "family parameter c");

  std::string map_name;
  std::vector<std::string> map_point;
  bool map_roundtrip = false;
  CLI::App* mapc = app.add_subcommand("map", "Apply a model map");
  mapc->add_option("name", map_name, "F, Finv, H, Hinv, J, Jinv, sym, syminv, symOmega1, symD21")
      ->required();
  mapc->add_option("point", map_point, "coordinates")->required();
  mapc->add_flag("--roundtrip", map_roundtrip, "print inverse-composition residual");

  double orbit_a = 0.0;
  std::uint64_t orbit_n = 100;
  std::uint64_t orbit_seed = 42;
  std::string orbit_out;
  CLI::App* orbit = app.add_subcommand("orbit", "Sample a leaf as CSV");
  orbit->add_option("a", orbit_a, "leaf index in [0, 1)")->required();
  orbit->add_option("--n", orbit_n, "number of points (default 100)");
  orbit->add_option("--seed", orbit_seed, "sampling seed (default 42)");
  orbit->add_option("--out", orbit_out, "output path (default stdout)");

  double levi_a = 0.0;
  double levi_theta = 0.0;
  std::string levi_alpha = "0";
  bool levi_json = false;
  CLI::App* levi = app.add_subcommand("levi", "Levi form report at a leaf point");
  levi->add_option("a", levi_a, "leaf index in (0, 1)")->required();
  levi->add_option("--theta", levi_theta, "rotation angle (default 0)");
  levi->add_option("--alpha", levi_alpha, "automorphism center (default 0)");
  levi->add_flag("--json", levi_json, "emit a single JSON record");

  std::string verify_suite;
  double verify_scale = 1.0;
  std::uint64_t verify_n = 0;
  std::uint64_t verify_seed = 42;
  std::string verify_out;
  CLI::App* verify = app.add_subcommand("verify", "Run verification suites");
  verify->add_option("suite", verify_suite, "suite name or 'all'")->required();
  verify->add_option("--scale", verify_scale, "sample-count scale (default 1)");
  verify->add_option("--n", verify_n, "exact sample count (overrides --scale)");
  verify->add_option("--seed", verify_seed, "sampling seed (default 42)");
  verify->add_option("--out", verify_out, "certificate path (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return exit_usage;
  }

  has_s = member->count("--s") > 0;
  has_t = member->count("--t") > 0;
  has_c = member->count("--c") > 0;
  if (member_domain == "Ds" && has_s) member_params = {param_s};
  if (member_domain == "Dst" && has_s && has_t)
    member_params = {param_s, param_t};
  if ((member_domain == "Dc" || member_domain == "Gc") && has_c)
    member_params = {param_c};

  sbd_context* ctx = sbd_context_create(nullptr);
  if (ctx == nullptr) {
    std::fprintf(stderr, "error: context creation failed\n");
    return exit_software;
  }

  int code = exit_usage;
  if (member->parsed()) {
    code = cmd_member(ctx, member_domain, member_point, member_condition,
                      member_params);
  } else if (mapc->parsed()) {
    code = cmd_map(ctx, map_name, map_point, map_roundtrip);
  } else if (orbit->parsed()) {
    code = cmd_orbit(ctx, orbit_a, orbit_n, orbit_seed, orbit_out);
  } else if (levi->parsed()) {
    code = cmd_levi(ctx, levi_a, levi_theta, levi_alpha, levi_json);
  } else if (verify->parsed()) {
    code = cmd_verify(ctx, verify_suite, verify_scale, verify_n, verify_seed,
                      verify_out);
  }
  sbd_context_destroy(ctx);
  return code;
}
