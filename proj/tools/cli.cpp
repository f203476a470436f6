// SPDX-License-Identifier: Apache-2.0
//
// Command-line front end; everything goes through the shared C API.

#include <cinttypes>
#include <cstdio>
#include <fstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "shearlet/shearlet.h"

namespace {

constexpr int kExitCheckFailed = 1;
constexpr int kExitUsage = 2;
constexpr int kExitIo = 3;

int report(slt_status status) {
  if (status == SLT_OK) return 0;
  std::fprintf(stderr, "error: %s\n", slt_last_error());
  switch (status) {
    case SLT_ERR_INVALID_ARGUMENT:
      return kExitUsage;
    case SLT_ERR_IO:
      return kExitIo;
    default:
      return kExitCheckFailed;
  }
}

struct FrameArgs {
  int d = 2;
  int n = 256;
  int j_max = -1;
  std::string variant = "smooth";
};

void add_frame_flags(CLI::App* app, FrameArgs& args) {
  app->add_option("--d", args.d, "dimension (2 or 3)");
  app->add_option("--N", args.n, "grid size per axis (power of two)");
  app->add_option("--jmax", args.j_max, "maximum scale (-1: default)");
  app->add_option("--variant", args.variant, "frame variant: smooth | cone_projected");
}

struct FrameHandle {
  slt_frame* ptr = nullptr;
  ~FrameHandle() { slt_frame_free(ptr); }
};
struct SignalHandle {
  slt_signal* ptr = nullptr;
  ~SignalHandle() { slt_signal_free(ptr); }
};
struct FieldHandle {
  slt_field* ptr = nullptr;
  ~FieldHandle() { slt_field_free(ptr); }
};
struct SequenceHandle {
  slt_sequence* ptr = nullptr;
  ~SequenceHandle() { slt_sequence_free(ptr); }
};

int open_frame(const FrameArgs& args, const std::string& frame_path, FrameHandle& frame) {
  const slt_status st = frame_path.empty()
                            ? slt_frame_build(args.d, args.n, args.j_max, args.variant.c_str(),
                                              &frame.ptr)
                            : slt_frame_load(frame_path.c_str(), &frame.ptr);
  return report(st);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"shearlet frame toolkit"};
  app.require_subcommand(1);

  // windows dump
  auto* windows = app.add_subcommand("windows", "spectral window utilities");
  windows->require_subcommand(1);
  auto* wdump = windows->add_subcommand("dump", "sample the 1-D windows to CSV");
  int wgrid = 512, wdegree = 7;
  std::string wout = "windows.csv";
  wdump->add_option("--grid", wgrid, "number of samples");
  wdump->add_option("--degree", wdegree, "meyer smoothstep degree (3,5,7,9)");
  wdump->add_option("--out", wout, "output CSV path");
  auto* wconfig = windows->add_subcommand("config", "emit the window-bank JSON config");
  int wcdegree = 7;
  std::string wcout = "windows.json";
  wconfig->add_option("--degree", wcdegree, "meyer smoothstep degree (3,5,7,9)");
  wconfig->add_option("--out", wcout, "output JSON path");

  // lattice enumerate
  auto* lattice = app.add_subcommand("lattice", "index-set utilities");
  lattice->require_subcommand(1);
  auto* lenum = lattice->add_subcommand("enumerate", "emit the (cone, j, l) index set as CSV");
  int ld = 2, ljmax = 3;
  std::string lout = "lattice.csv";
  lenum->add_option("--d", ld, "dimension");
  lenum->add_option("--jmax", ljmax, "maximum scale");
  lenum->add_option("--out", lout, "output CSV path");

  // frame build
  auto* framecmd = app.add_subcommand("frame", "frame construction");
  framecmd->require_subcommand(1);
  auto* fbuild = framecmd->add_subcommand("build", "build a frame and persist its masks");
  FrameArgs fargs;
  add_frame_flags(fbuild, fargs);
  std::string fout = "frame.slt";
  bool fcheck = false;
  fbuild->add_option("--out", fout, "output frame file");
  fbuild->add_flag("--parseval", fcheck, "also print the Parseval deviation");

  // transform
  auto* transform = app.add_subcommand("transform", "analysis / synthesis transforms");
  transform->require_subcommand(1);
  FrameArgs targs;
  std::string tframe, tin, tout2;
  auto add_transform_common = [&](CLI::App* sub) {
    add_frame_flags(sub, targs);
    sub->add_option("--frame", tframe, "frame file (default: build from flags)");
    sub->add_option("--input", tin, "input signal (.csv or raw .bin + .json sidecar)")
        ->required();
  };
  auto* tfwd = transform->add_subcommand("forward", "signal -> coefficient dump");
  add_transform_common(tfwd);
  tfwd->add_option("--out", tout2, "output coefficient file")->required();
  auto* tinv = transform->add_subcommand("inverse", "coefficient dump -> signal");
  FrameArgs iargs;
  std::string iframe, iin, iout;
  add_frame_flags(tinv, iargs);
  tinv->add_option("--frame", iframe, "frame file (default: build from flags)");
  tinv->add_option("--input", iin, "input coefficient file")->required();
  tinv->add_option("--out", iout, "output signal path")->required();
  auto* trt = transform->add_subcommand("roundtrip", "forward then inverse, print the error");
  FrameArgs rargs;
  std::string rframe, rin;
  bool rsequence = false;
  add_frame_flags(trt, rargs);
  trt->add_option("--frame", rframe, "frame file (default: build from flags)");
  trt->add_option("--input", rin, "input signal")->required();
  trt->add_flag("--sequence", rsequence, "round trip through the subsampled coefficients");

  // norm
  auto* norm = app.add_subcommand("norm", "evaluate a smoothness norm");
  FrameArgs nargs;
  std::string nspace = "BAB", ninput, nframe;
  double nalpha = 0.0, np = 2.0, nq = 2.0;
  int nquad = 256;
  add_frame_flags(norm, nargs);
  norm->add_option("--space", nspace, "BAB|FAB|B|F (signals) or bAB|fAB|b|f (sequences)")
      ->required();
  norm->add_option("--alpha", nalpha, "smoothness index");
  norm->add_option("--p", np, "integrability index (inf allowed)");
  norm->add_option("--q", nq, "summability index (inf allowed)");
  norm->add_option("--quad", nquad, "quadrature grid for f-type sequence norms");
  norm->add_option("--frame", nframe, "frame file (default: build from flags)");
  norm->add_option("--input", ninput, "input signal or sequence file")->required();

  // verify
  auto* verify = app.add_subcommand("verify", "run the verification suite");
  FrameArgs vargs;
  std::string vsuite = "all", vout, vconfig;
  uint64_t vseed = 1;
  bool vlist = false;
  add_frame_flags(verify, vargs);
  verify->add_option("--suite", vsuite, "check name or 'all'");
  verify->add_option("--seed", vseed, "random seed");
  verify->add_option("--out", vout, "JSON report path");
  verify->add_option("--config", vconfig, "JSON run config; its fields override the flags");
  verify->add_flag("--list", vlist, "list available checks and exit");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return e.get_exit_code() == 0 ? 0 : kExitUsage;
  }

  if (wdump->parsed())
    return report(slt_windows_dump_csv(wgrid, wdegree, wout.c_str()));

  if (wconfig->parsed())
    return report(slt_windows_config_json(wcdegree, wcout.c_str()));

  if (lenum->parsed())
    return report(slt_lattice_enumerate_csv(ld, ljmax, lout.c_str()));

  if (fbuild->parsed()) {
    FrameHandle frame;
    if (int rc = report(slt_frame_build(fargs.d, fargs.n, fargs.j_max, fargs.variant.c_str(),
                                        &frame.ptr)))
      return rc;
    if (fcheck) {
      double dev = 0.0;
      if (int rc = report(slt_frame_parseval(frame.ptr, &dev))) return rc;
      std::printf("parseval_deviation %.17g\n", dev);
    }
    std::printf("bands %d\n", slt_frame_band_count(frame.ptr));
    return report(slt_frame_save(frame.ptr, fout.c_str()));
  }

  if (tfwd->parsed()) {
    FrameHandle frame;
    if (int rc = open_frame(targs, tframe, frame)) return rc;
    SignalHandle sig;
    if (int rc = report(slt_signal_load(tin.c_str(), &sig.ptr))) return rc;
    FieldHandle field;
    if (int rc = report(slt_forward(frame.ptr, sig.ptr, &field.ptr))) return rc;
    return report(slt_field_save(frame.ptr, field.ptr, tout2.c_str()));
  }

  if (tinv->parsed()) {
    FrameHandle frame;
    if (int rc = open_frame(iargs, iframe, frame)) return rc;
    FieldHandle field;
    if (int rc = report(slt_field_load(frame.ptr, iin.c_str(), &field.ptr))) return rc;
    SignalHandle sig;
    if (int rc = report(slt_inverse(frame.ptr, field.ptr, &sig.ptr))) return rc;
    return report(slt_signal_save(sig.ptr, iout.c_str()));
  }

  if (trt->parsed()) {
    FrameHandle frame;
    if (int rc = open_frame(rargs, rframe, frame)) return rc;
    SignalHandle sig;
    if (int rc = report(slt_signal_load(rin.c_str(), &sig.ptr))) return rc;
    FieldHandle field;
    if (int rc = report(slt_forward(frame.ptr, sig.ptr, &field.ptr))) return rc;
    SignalHandle back;
    if (rsequence) {
      SequenceHandle seq;
      if (int rc = report(slt_subsample(frame.ptr, field.ptr, &seq.ptr))) return rc;
      if (int rc = report(slt_synthesize(frame.ptr, seq.ptr, &back.ptr))) return rc;
    } else {
      if (int rc = report(slt_inverse(frame.ptr, field.ptr, &back.ptr))) return rc;
    }
    double err = 0.0;
    if (int rc = report(slt_rel_error(back.ptr, sig.ptr, &err))) return rc;
    std::printf("roundtrip_relative_error %.17g\n", err);
    return 0;
  }

  if (norm->parsed()) {
    const bool sequence_space = nspace == "bAB" || nspace == "fAB" || nspace == "b" || nspace == "f";
    double value = 0.0;
    if (sequence_space) {
      SequenceHandle seq;
      if (int rc = report(slt_sequence_load(ninput.c_str(), &seq.ptr))) return rc;
      if (int rc = report(slt_norm_sequence(seq.ptr, nspace.c_str(), nalpha, np, nq, nquad,
                                            &value)))
        return rc;
    } else {
      SignalHandle sig;
      if (int rc = report(slt_signal_load(ninput.c_str(), &sig.ptr))) return rc;
      FrameHandle frame;
      if (!nframe.empty() || nspace == "BAB" || nspace == "FAB") {
        int d = 0, n = 0;
        slt_signal_info(sig.ptr, &d, &n);
        FrameArgs fa = nargs;
        fa.d = d;
        fa.n = n;
        if (int rc = open_frame(fa, nframe, frame)) return rc;
      }
      if (int rc = report(slt_norm_distribution(frame.ptr, sig.ptr, nspace.c_str(), nalpha, np,
                                                nq, &value)))
        return rc;
    }
    std::printf("{\"space\": \"%s\", \"alpha\": %.17g, \"p\": %.17g, \"q\": %.17g, \"value\": %.17g}\n",
                nspace.c_str(), nalpha, np, nq, value);
    return 0;
  }

  if (verify->parsed()) {
    if (vlist) {
      std::printf("%s\n", slt_verify_suites());
      return 0;
    }
    if (!vconfig.empty()) {
      std::ifstream in(vconfig);
      if (!in) {
        std::fprintf(stderr, "error: cannot open %s\n", vconfig.c_str());
        return kExitIo;
      }
      try {
        const nlohmann::json cfg = nlohmann::json::parse(in);
        if (cfg.contains("suite")) vsuite = cfg.at("suite").get<std::string>();
        if (cfg.contains("d")) vargs.d = cfg.at("d").get<int>();
        if (cfg.contains("N")) vargs.n = cfg.at("N").get<int>();
        if (cfg.contains("jmax")) vargs.j_max = cfg.at("jmax").get<int>();
        if (cfg.contains("variant")) vargs.variant = cfg.at("variant").get<std::string>();
        if (cfg.contains("seed")) vseed = cfg.at("seed").get<uint64_t>();
        if (cfg.contains("out")) vout = cfg.at("out").get<std::string>();
      } catch (const std::exception& e) {
        std::fprintf(stderr, "error: bad config: %s\n", e.what());
        return kExitUsage;
      }
    }
    int ok = 0;
    const slt_status st =
        slt_verify(vsuite.c_str(), vargs.d, vargs.n, vargs.j_max, vargs.variant.c_str(), vseed,
                   vout.empty() ? nullptr : vout.c_str(), &ok);
    if (int rc = report(st)) return rc;
    std::printf("verify %s\n", ok ? "PASS" : "FAIL");
    return ok ? 0 : kExitCheckFailed;
  }

  return kExitUsage;
}
