#ifndef HARTOGS_TEST_SUPPORT_HPP
#define HARTOGS_TEST_SUPPORT_HPP

#include <gtest/gtest.h>

#include "hartogs/error.hpp"

#define EXPECT_HARTOGS_ERROR(stmt, expected_kind)                           \
  do {                                                                      \
    try {                                                                   \
      stmt;                                                                 \
      ADD_FAILURE() << "expected " << hartogs::to_string(expected_kind);    \
    } catch (const hartogs::HartogsError& e) {                              \
      EXPECT_EQ(e.kind(), expected_kind) << e.what();                       \
    }                                                                       \
  } while (0)

#endif
