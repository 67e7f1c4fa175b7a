#include "ohl/structures.hpp"

namespace ohl {

template class Structures<MatBackend>;
template class Structures<FinSetBackend>;
template class Structures<TrivialBackend>;

}  // namespace ohl
