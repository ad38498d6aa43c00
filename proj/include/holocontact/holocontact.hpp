#pragma once

#include "holocontact/errors.hpp"
#include "holocontact/random.hpp"
#include "holocontact/polynomial.hpp"
#include "holocontact/algebra.hpp"
#include "holocontact/contact.hpp"
#include "holocontact/linear.hpp"
#include "holocontact/leaf.hpp"
#include "holocontact/index.hpp"

namespace holocontact {

inline constexpr const char* version = "0.1.0";

} // namespace holocontact
