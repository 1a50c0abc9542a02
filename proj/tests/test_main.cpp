#define DOCTEST_CONFIG_IMPLEMENT
#include <doctest.h>

#include <cstdlib>
#include <cstring>

unsigned long long g_test_seed = 0xC1A55E5ULL;

int main(int argc, char** argv) {
  for (int i = 1; i < argc; ++i) {
    if (std::strncmp(argv[i], "--seed=", 7) == 0)
      g_test_seed = std::strtoull(argv[i] + 7, nullptr, 10);
    else if (std::strcmp(argv[i], "--seed") == 0 && i + 1 < argc)
      g_test_seed = std::strtoull(argv[++i], nullptr, 10);
  }
  if (const char* env = std::getenv("MICAL_TEST_SEED"))
    g_test_seed = std::strtoull(env, nullptr, 10);
  doctest::Context ctx;
  ctx.setOption("no-version", true);
  ctx.applyCommandLine(argc, argv);
  return ctx.run();
}
