// Copyright 2026 The sgs Authors. All rights reserved.
// Use of this source code is governed by the Apache-2.0 license
// that can be found in the LICENSE file.

#include <cstdio>

int main() {
  std::puts("sgs: placeholder");
  return 0;
}
