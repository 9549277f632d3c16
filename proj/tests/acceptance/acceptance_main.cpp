// Full acceptance run through the C API: one line per criterion, non-zero exit on any failure.
#include <cstdio>
#include <cstring>

#include "cutlab/cutlab.h"

namespace {

void line(void* user, int, const char*, int passed, double, const char* text) {
  std::printf("%s\n", text);
  std::fflush(stdout);
  if (!passed) ++*static_cast<int*>(user);
}

}  // namespace

int main(int argc, char** argv) {
  const int quick = argc > 1 && std::strcmp(argv[1], "--quick") == 0;
  int failed = 0, all = 0;
  const cutlab_status s = cutlab_selftest(quick, 1, line, &failed, &all);
  if (s != CUTLAB_OK) {
    std::printf("selftest error: %s\n", cutlab_last_error());
    return 2;
  }
  std::printf("%s: %d criteria failed\n", all ? "ALL PASS" : "FAILURES", failed);
  return all ? 0 : 1;
}
