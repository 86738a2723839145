#pragma once

#include <string>
#include <string_view>

namespace agtd {

/// English Porter-style stemmer (the revised "English" variant with the
/// -li / -ogi / exceptional-form rules). Input must already be lowercase
/// ASCII; anything else is returned unchanged. Behavior is pinned by
/// tests/data/stem_golden.tsv.
std::string stem(std::string_view word);

}  // namespace agtd
