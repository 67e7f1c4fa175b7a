#include "ohl/spanv.hpp"

namespace ohl {

template class SpanV<MatBackend>;
template class SpanV<FinSetBackend>;
template class SpanV<TrivialBackend>;

}  // namespace ohl
