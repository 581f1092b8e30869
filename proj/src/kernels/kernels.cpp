#include "ghwlab/kernels.hpp"

namespace ghwlab::kernels {

#ifndef GHWLAB_HAVE_AVX2
const Backend* avx2_backend() { return nullptr; }
#endif

namespace {

const Backend* g_active = nullptr;

const Backend* pick_default() {
  if (const Backend* b = avx2_backend()) return b;
  return &scalar_backend();
}

}  // namespace

const Backend& active() {
  if (!g_active) g_active = pick_default();
  return *g_active;
}

bool select(std::string_view name) {
  if (name == "scalar") {
    g_active = &scalar_backend();
    return true;
  }
  if (name == "avx2") {
    if (const Backend* b = avx2_backend()) {
      g_active = b;
      return true;
    }
    return false;
  }
  return false;
}

}  // namespace ghwlab::kernels
