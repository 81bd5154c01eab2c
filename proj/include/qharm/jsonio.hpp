#pragma once

#include <json.hpp>

#include "qharm/algebra.hpp"
#include "qharm/harmonic.hpp"
#include "qharm/ratmat.hpp"
#include "qharm/report.hpp"

namespace qharm {

using json = nlohmann::ordered_json;

/// {"N": n, "terms": [{"nu": [...], "coeff": "..."}]}, terms graded-lex,
/// leading first.
json poly_to_json(const Poly& p);
Poly poly_from_json(const json& j);

/// {"rows": [["...", ...], ...]}
json matrix_to_json(const QMatrix& m);

/// {"suite": ..., "cells": [{"id", "ok", "detail"}]}
json report_to_json(const Report& r);

json label_to_json(const HarmonicLabel& l);

} // namespace qharm
