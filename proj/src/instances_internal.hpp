#pragma once

#include "hopfchain/hopf.hpp"

#include <memory>

namespace hopfchain::detail {

std::shared_ptr<const HopfAlgebra> make_shuffle();
std::shared_ptr<const HopfAlgebra> make_free_assoc();
std::shared_ptr<const HopfAlgebra> make_nsym();
std::shared_ptr<const HopfAlgebra> make_sym_h();
std::shared_ptr<const HopfAlgebra> make_sym_p();
std::shared_ptr<const HopfAlgebra> make_sym_schur();
std::shared_ptr<const HopfAlgebra> make_graphs();
std::shared_ptr<const HopfAlgebra> make_ck_forests();
std::shared_ptr<const HopfAlgebra> make_qsym();

}  // namespace hopfchain::detail
