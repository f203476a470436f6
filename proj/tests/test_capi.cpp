// SPDX-License-Identifier: Apache-2.0
//
// Exercises the shared-library C interface end to end.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "test_main.hpp"

#include <cstdio>
#include <limits>
#include <string>
#include <vector>

#include "shearlet/shearlet.h"

TEST_CASE("C API frame, transform, norm round trip") {
  slt_frame* frame = nullptr;
  REQUIRE(slt_frame_build(2, 64, 2, "smooth", &frame) == SLT_OK);
  CHECK(slt_frame_band_count(frame) == 28);  // 2(3+5)+... merged smooth bands at j<=2

  double dev = 0.0;
  REQUIRE(slt_frame_parseval(frame, &dev) == SLT_OK);
  CHECK(dev <= 1e-10);

  slt_signal* sig = nullptr;
  REQUIRE(slt_signal_random(2, 64, 5, 0, &sig) == SLT_OK);
  int d = 0, n = 0;
  slt_signal_info(sig, &d, &n);
  CHECK(d == 2);
  CHECK(n == 64);

  slt_field* field = nullptr;
  REQUIRE(slt_forward(frame, sig, &field) == SLT_OK);
  slt_signal* back = nullptr;
  REQUIRE(slt_inverse(frame, field, &back) == SLT_OK);
  double err = 1.0;
  REQUIRE(slt_rel_error(back, sig, &err) == SLT_OK);
  CHECK(err <= 1e-10);

  slt_sequence* seq = nullptr;
  REQUIRE(slt_subsample(frame, field, &seq) == SLT_OK);
  slt_signal* resyn = nullptr;
  REQUIRE(slt_synthesize(frame, seq, &resyn) == SLT_OK);
  REQUIRE(slt_rel_error(resyn, sig, &err) == SLT_OK);
  CHECK(err <= 1e-6);

  double value = 0.0;
  REQUIRE(slt_norm_distribution(frame, sig, "BAB", 0.3, 2.0, 2.0, &value) == SLT_OK);
  CHECK(value > 0.0);
  REQUIRE(slt_norm_distribution(frame, sig, "B", 0.3, 2.0, 2.0, &value) == SLT_OK);
  CHECK(value > 0.0);
  REQUIRE(slt_norm_sequence(seq, "bAB", 0.3, 2.0, 2.0, 64, &value) == SLT_OK);
  CHECK(value > 0.0);
  REQUIRE(slt_norm_sequence(seq, "fAB", 0.3, 2.0, 2.0, 64, &value) == SLT_OK);
  CHECK(value > 0.0);

  // files through the C surface
  REQUIRE(slt_signal_save(sig, "/tmp/capi_sig.bin") == SLT_OK);
  slt_signal* loaded = nullptr;
  REQUIRE(slt_signal_load("/tmp/capi_sig.bin", &loaded) == SLT_OK);
  REQUIRE(slt_rel_error(loaded, sig, &err) == SLT_OK);
  CHECK(err == 0.0);
  REQUIRE(slt_frame_save(frame, "/tmp/capi_frame.slt") == SLT_OK);
  slt_frame* frame2 = nullptr;
  REQUIRE(slt_frame_load("/tmp/capi_frame.slt", &frame2) == SLT_OK);
  REQUIRE(slt_frame_parseval(frame2, &dev) == SLT_OK);
  CHECK(dev <= 1e-10);
  REQUIRE(slt_field_save(frame, field, "/tmp/capi_field.bin") == SLT_OK);
  slt_field* field2 = nullptr;
  REQUIRE(slt_field_load(frame2, "/tmp/capi_field.bin", &field2) == SLT_OK);
  slt_signal* back2 = nullptr;
  REQUIRE(slt_inverse(frame2, field2, &back2) == SLT_OK);
  REQUIRE(slt_rel_error(back2, sig, &err) == SLT_OK);
  CHECK(err <= 1e-10);
  REQUIRE(slt_sequence_save(seq, "/tmp/capi_seq.bin") == SLT_OK);
  slt_sequence* seq2 = nullptr;
  REQUIRE(slt_sequence_load("/tmp/capi_seq.bin", &seq2) == SLT_OK);
  REQUIRE(slt_norm_sequence(seq2, "bAB", 0.3, 2.0, 2.0, 64, &value) == SLT_OK);

  slt_sequence_free(seq2);
  slt_sequence_free(seq);
  slt_field_free(field2);
  slt_field_free(field);
  slt_signal_free(back2);
  slt_signal_free(resyn);
  slt_signal_free(back);
  slt_signal_free(loaded);
  slt_signal_free(sig);
  slt_frame_free(frame2);
  slt_frame_free(frame);
}

TEST_CASE("C API error paths") {
  slt_frame* frame = nullptr;
  CHECK(slt_frame_build(2, 100, 2, "smooth", &frame) == SLT_ERR_INVALID_ARGUMENT);
  CHECK(std::string(slt_last_error()).find("power of two") != std::string::npos);
  CHECK(slt_frame_build(2, 64, 2, "bogus", &frame) == SLT_ERR_INVALID_ARGUMENT);
  CHECK(slt_frame_load("/nonexistent/frame.slt", &frame) == SLT_ERR_IO);
  CHECK(slt_frame_build(2, 64, 2, nullptr, &frame) == SLT_ERR_INVALID_ARGUMENT);
  CHECK(slt_frame_band_count(nullptr) == -1);

  REQUIRE(slt_frame_build(2, 64, 2, "smooth", &frame) == SLT_OK);
  slt_signal* sig = nullptr;
  REQUIRE(slt_signal_random(2, 32, 1, 0, &sig) == SLT_OK);
  slt_field* field = nullptr;
  CHECK(slt_forward(frame, sig, &field) == SLT_ERR_INVALID_ARGUMENT);  // grid mismatch
  double value = 0.0;
  CHECK(slt_norm_distribution(frame, sig, "nope", 0.0, 2.0, 2.0, &value) ==
        SLT_ERR_INVALID_ARGUMENT);
  CHECK(slt_norm_distribution(frame, sig, "FAB", 0.0,
                              std::numeric_limits<double>::infinity(), 2.0,
                              &value) == SLT_ERR_INVALID_ARGUMENT);
  slt_signal_free(sig);
  slt_frame_free(frame);
}

TEST_CASE("C API verify entry point") {
  int ok = 0;
  REQUIRE(slt_verify("parseval", 2, 64, 2, "smooth", 1, "/tmp/capi_report.json", &ok) == SLT_OK);
  CHECK(ok == 1);
  std::FILE* f = std::fopen("/tmp/capi_report.json", "r");
  REQUIRE(f != nullptr);
  std::fclose(f);
  CHECK(std::string(slt_verify_suites()).find("parseval") != std::string::npos);
  CHECK(slt_verify("bogus", 2, 64, 2, "smooth", 1, nullptr, &ok) == SLT_ERR_INVALID_ARGUMENT);
}
