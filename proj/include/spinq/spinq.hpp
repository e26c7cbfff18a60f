#pragma once

#include "errors.hpp"
#include "integers.hpp"
#include "int_matrix.hpp"
#include "normal_form.hpp"
#include "qmodz.hpp"
#include "homology.hpp"
#include "spinc.hpp"
#include "quad.hpp"
#include "torsion.hpp"
#include "presentation_file.hpp"
#include "report.hpp"
