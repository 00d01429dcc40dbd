#ifndef DOMDRAW_DOMDRAW_HPP
#define DOMDRAW_DOMDRAW_HPP

#include "domdraw/error.hpp"
#include "domdraw/graph.hpp"
#include "domdraw/matching.hpp"
#include "domdraw/channels.hpp"
#include "domdraw/ctc.hpp"
#include "domdraw/drawing.hpp"
#include "domdraw/modular.hpp"
#include "domdraw/query.hpp"
#include "domdraw/svg.hpp"

#endif  // DOMDRAW_DOMDRAW_HPP
