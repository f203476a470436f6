// SPDX-License-Identifier: Apache-2.0
#include "shearlet/shearlet.h"

#include <cstring>
#include <fstream>
#include <string>

#include "core/io.hpp"
#include "core/spaces.hpp"
#include "core/verify.hpp"

namespace {

thread_local std::string g_last_error;

slt_status fail(slt_status code, const std::string& message) {
  g_last_error = message;
  return code;
}

template <typename Fn>
slt_status guarded(Fn&& fn) {
  try {
    return fn();
  } catch (const std::invalid_argument& e) {
    return fail(SLT_ERR_INVALID_ARGUMENT, e.what());
  } catch (const std::ios_base::failure& e) {
    return fail(SLT_ERR_IO, e.what());
  } catch (const std::exception& e) {
    const std::string what = e.what();
    if (what.find("open") != std::string::npos || what.find("read") != std::string::npos ||
        what.find("write") != std::string::npos)
      return fail(SLT_ERR_IO, what);
    return fail(SLT_ERR_INTERNAL, what);
  }
}

bool ends_with(const std::string& s, const std::string& suffix) {
  return s.size() >= suffix.size() && s.compare(s.size() - suffix.size(), suffix.size(), suffix) == 0;
}

}  // namespace

struct slt_frame {
  slt::Frame frame;
};
struct slt_signal {
  slt::GridFunction g;
};
struct slt_field {
  slt::CoefficientField field;
};
struct slt_sequence {
  slt::SequenceCoefficients seq;
};

extern "C" {

const char* slt_last_error(void) { return g_last_error.c_str(); }

slt_status slt_frame_build(int d, int n, int j_max, const char* variant, slt_frame** out) {
  if (!out || !variant) return fail(SLT_ERR_INVALID_ARGUMENT, "null argument");
  return guarded([&] {
    slt::FrameSpec spec;
    spec.dim = d;
    spec.n = n;
    spec.j_max = j_max;
    spec.variant = slt::frame_variant_from_string(variant);
    *out = new slt_frame{slt::build_frame(spec)};
    return SLT_OK;
  });
}

slt_status slt_frame_load(const char* path, slt_frame** out) {
  if (!out || !path) return fail(SLT_ERR_INVALID_ARGUMENT, "null argument");
  return guarded([&] {
    *out = new slt_frame{slt::read_frame(path)};
    return SLT_OK;
  });
}

slt_status slt_frame_save(const slt_frame* frame, const char* path) {
  if (!frame || !path) return fail(SLT_ERR_INVALID_ARGUMENT, "null argument");
  return guarded([&] {
    slt::write_frame(frame->frame, path);
    return SLT_OK;
  });
}

void slt_frame_free(slt_frame* frame) { delete frame; }

int slt_frame_band_count(const slt_frame* frame) {
  return frame ? static_cast<int>(frame->frame.bands.size()) : -1;
}

slt_status slt_frame_parseval(const slt_frame* frame, double* max_deviation) {
  if (!frame || !max_deviation) return fail(SLT_ERR_INVALID_ARGUMENT, "null argument");
  return guarded([&] {
    *max_deviation = slt::verify_parseval(frame->frame);
    return SLT_OK;
  });
}

slt_status slt_signal_create(int d, int n, const double* real_samples, slt_signal** out) {
  if (!out || !real_samples) return fail(SLT_ERR_INVALID_ARGUMENT, "null argument");
  return guarded([&] {
    if (d < 1 || n < 2) throw std::invalid_argument("bad signal dimensions");
    slt::GridFunction g(d, n);
    for (size_t i = 0; i < g.size(); ++i) g.samples[i] = real_samples[i];
    *out = new slt_signal{std::move(g)};
    return SLT_OK;
  });
}

slt_status slt_signal_random(int d, int n, uint64_t seed, int bandlimited, slt_signal** out) {
  if (!out) return fail(SLT_ERR_INVALID_ARGUMENT, "null argument");
  return guarded([&] {
    *out = new slt_signal{bandlimited ? slt::random_bandlimited_signal(d, n, seed)
                                      : slt::random_real_signal(d, n, seed)};
    return SLT_OK;
  });
}

slt_status slt_signal_load(const char* path, slt_signal** out) {
  if (!out || !path) return fail(SLT_ERR_INVALID_ARGUMENT, "null argument");
  return guarded([&] {
    const std::string p = path;
    *out = new slt_signal{ends_with(p, ".csv") ? slt::read_signal_csv(p) : slt::read_signal(p)};
    return SLT_OK;
  });
}

slt_status slt_signal_save(const slt_signal* sig, const char* path) {
  if (!sig || !path) return fail(SLT_ERR_INVALID_ARGUMENT, "null argument");
  return guarded([&] {
    const std::string p = path;
    if (ends_with(p, ".csv"))
      slt::write_signal_csv(sig->g, p);
    else
      slt::write_signal(sig->g, p);
    return SLT_OK;
  });
}

slt_status slt_signal_info(const slt_signal* sig, int* d, int* n) {
  if (!sig) return fail(SLT_ERR_INVALID_ARGUMENT, "null argument");
  if (d) *d = sig->g.dim;
  if (n) *n = sig->g.n;
  return SLT_OK;
}

void slt_signal_free(slt_signal* sig) { delete sig; }

slt_status slt_rel_error(const slt_signal* a, const slt_signal* b, double* out) {
  if (!a || !b || !out) return fail(SLT_ERR_INVALID_ARGUMENT, "null argument");
  return guarded([&] {
    *out = slt::rel_l2_error(a->g, b->g);
    return SLT_OK;
  });
}

slt_status slt_forward(const slt_frame* frame, const slt_signal* sig, slt_field** out) {
  if (!frame || !sig || !out) return fail(SLT_ERR_INVALID_ARGUMENT, "null argument");
  return guarded([&] {
    *out = new slt_field{slt::forward_grid(frame->frame, sig->g)};
    return SLT_OK;
  });
}

slt_status slt_inverse(const slt_frame* frame, const slt_field* field, slt_signal** out) {
  if (!frame || !field || !out) return fail(SLT_ERR_INVALID_ARGUMENT, "null argument");
  return guarded([&] {
    *out = new slt_signal{slt::inverse_grid(frame->frame, field->field)};
    return SLT_OK;
  });
}

slt_status slt_field_save(const slt_frame* frame, const slt_field* field, const char* path) {
  if (!frame || !field || !path) return fail(SLT_ERR_INVALID_ARGUMENT, "null argument");
  return guarded([&] {
    slt::write_coefficients(frame->frame, field->field, path);
    return SLT_OK;
  });
}

slt_status slt_field_load(const slt_frame* frame, const char* path, slt_field** out) {
  if (!frame || !path || !out) return fail(SLT_ERR_INVALID_ARGUMENT, "null argument");
  return guarded([&] {
    *out = new slt_field{slt::read_coefficients(frame->frame, path)};
    return SLT_OK;
  });
}

void slt_field_free(slt_field* field) { delete field; }

slt_status slt_subsample(const slt_frame* frame, const slt_field* field, slt_sequence** out) {
  if (!frame || !field || !out) return fail(SLT_ERR_INVALID_ARGUMENT, "null argument");
  return guarded([&] {
    *out = new slt_sequence{slt::subsample(frame->frame, field->field)};
    return SLT_OK;
  });
}

slt_status slt_synthesize(const slt_frame* frame, const slt_sequence* seq, slt_signal** out) {
  if (!frame || !seq || !out) return fail(SLT_ERR_INVALID_ARGUMENT, "null argument");
  return guarded([&] {
    *out = new slt_signal{slt::synthesize_sequence(frame->frame, seq->seq)};
    return SLT_OK;
  });
}

slt_status slt_sequence_save(const slt_sequence* seq, const char* path) {
  if (!seq || !path) return fail(SLT_ERR_INVALID_ARGUMENT, "null argument");
  return guarded([&] {
    slt::write_sequence(seq->seq, path);
    return SLT_OK;
  });
}

slt_status slt_sequence_load(const char* path, slt_sequence** out) {
  if (!path || !out) return fail(SLT_ERR_INVALID_ARGUMENT, "null argument");
  return guarded([&] {
    *out = new slt_sequence{slt::read_sequence(path)};
    return SLT_OK;
  });
}

void slt_sequence_free(slt_sequence* seq) { delete seq; }

slt_status slt_norm_distribution(const slt_frame* frame, const slt_signal* sig,
                                 const char* space, double alpha, double p, double q,
                                 double* out) {
  if (!sig || !space || !out) return fail(SLT_ERR_INVALID_ARGUMENT, "null argument");
  return guarded([&] {
    const slt::SmoothnessParams prm{alpha, p, q};
    const std::string s = space;
    if (s == "B" || s == "F") {
      // dyadic norms build their own scale stack; no frame handle needed
      const slt::DyadicStack stack = slt::build_dyadic_stack(sig->g.dim, sig->g.n);
      *out = slt::dyadic_distribution_norm(stack, sig->g, prm, s == "F");
      return SLT_OK;
    }
    if (!frame) throw std::invalid_argument("shear-anisotropic norms need a frame");
    if (s == "BAB") {
      *out = slt::besov_ab_norm(frame->frame, sig->g, prm);
    } else if (s == "FAB") {
      *out = slt::tl_ab_norm(frame->frame, sig->g, prm);
    } else {
      throw std::invalid_argument("unknown distribution space " + s);
    }
    return SLT_OK;
  });
}

slt_status slt_norm_sequence(const slt_sequence* seq, const char* space, double alpha, double p,
                             double q, int quad_n, double* out) {
  if (!seq || !space || !out) return fail(SLT_ERR_INVALID_ARGUMENT, "null argument");
  return guarded([&] {
    const slt::SmoothnessParams prm{alpha, p, q};
    const std::string s = space;
    if (s == "bAB")
      *out = slt::besov_seq_norm(seq->seq, prm);
    else if (s == "fAB")
      *out = slt::tl_seq_norm(seq->seq, prm, quad_n);
    else if (s == "b")
      *out = slt::dyadic_besov_seq_norm(seq->seq, prm);
    else if (s == "f")
      *out = slt::dyadic_tl_seq_norm(seq->seq, prm, quad_n);
    else
      throw std::invalid_argument("unknown sequence space " + s);
    return SLT_OK;
  });
}

slt_status slt_windows_dump_csv(int grid_n, int meyer_degree, const char* path) {
  if (!path) return fail(SLT_ERR_INVALID_ARGUMENT, "null argument");
  return guarded([&] {
    if (grid_n < 2) throw std::invalid_argument("grid_n must be >= 2");
    const slt::WindowBank bank(meyer_degree);
    std::ofstream out(path);
    if (!out) throw std::runtime_error(std::string("cannot open ") + path);
    out.precision(17);
    out << "omega,psi1,psi1_capped,psi2,v,phi_smooth,phi_dyadic,big_phi_dyadic,lowpass_1d\n";
    for (int i = 0; i <= grid_n; ++i) {
      const double w = -2.5 + 5.0 * i / grid_n;
      const double lp[1] = {w};
      out << w << "," << bank.psi1(w) << "," << bank.psi1_capped(w) << "," << bank.psi2(w) << ","
          << bank.v(w) << "," << bank.phi_smooth(w) << "," << bank.phi_dyadic_radial(w) << ","
          << bank.big_phi_dyadic_radial(w) << "," << bank.big_psi(std::span<const double>(lp, 1))
          << "\n";
    }
    return SLT_OK;
  });
}

slt_status slt_windows_config_json(int meyer_degree, const char* path) {
  if (!path) return fail(SLT_ERR_INVALID_ARGUMENT, "null argument");
  return guarded([&] {
    const slt::WindowBank bank(meyer_degree);
    std::ofstream out(path);
    if (!out) throw std::runtime_error(std::string("cannot open ") + path);
    out << slt::window_bank_config(bank) << "\n";
    return SLT_OK;
  });
}

slt_status slt_lattice_enumerate_csv(int d, int j_max, const char* path) {
  if (!path) return fail(SLT_ERR_INVALID_ARGUMENT, "null argument");
  return guarded([&] {
    if (d < 2 || j_max < 0) throw std::invalid_argument("bad lattice arguments");
    std::ofstream out(path);
    if (!out) throw std::runtime_error(std::string("cannot open ") + path);
    out << "cone,scale";
    for (int i = 0; i < d - 1; ++i) out << ",l" << i + 1;
    out << ",boundary,cell_volume,translations\n";
    out.precision(17);
    for (int j = 0; j <= j_max; ++j) {
      for (int cone = 1; cone <= d; ++cone) {
        for (const auto& shear : slt::enumerate_shears(j, d)) {
          slt::ShearIndex idx{cone, j, shear, std::vector<int64_t>(d, 0)};
          out << cone << "," << j;
          for (int64_t l : shear) out << "," << l;
          out << "," << (idx.boundary() ? 1 : 0) << "," << std::ldexp(1.0, -(d + 1) * j) << ","
              << (int64_t{1} << ((d + 1) * j)) << "\n";
        }
      }
    }
    return SLT_OK;
  });
}

slt_status slt_verify(const char* suite, int d, int n, int j_max, const char* variant,
                      uint64_t seed, const char* report_path, int* all_passed) {
  if (!suite || !variant) return fail(SLT_ERR_INVALID_ARGUMENT, "null argument");
  return guarded([&] {
    slt::VerifyConfig cfg;
    cfg.dim = d;
    cfg.n = n;
    cfg.j_max = j_max;
    cfg.variant = slt::frame_variant_from_string(variant);
    cfg.seed = seed;
    const auto reports = slt::run_verify_suite(suite, cfg);
    bool ok = !reports.empty();
    for (const auto& r : reports) ok = ok && r.pass;
    if (report_path) {
      std::ofstream out(report_path);
      if (!out) throw std::runtime_error(std::string("cannot open ") + report_path);
      out << slt::report_to_json(reports, cfg) << "\n";
    }
    if (all_passed) *all_passed = ok ? 1 : 0;
    return SLT_OK;
  });
}

const char* slt_verify_suites(void) {
  static std::string names = [] {
    std::string s;
    for (const auto& name : slt::verify_suite_names()) {
      if (!s.empty()) s += " ";
      s += name;
    }
    return s;
  }();
  return names.c_str();
}

}  // extern "C"
