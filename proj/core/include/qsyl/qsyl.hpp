#pragma once

#include "qsyl/adjoint.hpp"
#include "qsyl/blocks.hpp"
#include "qsyl/certificate.hpp"
#include "qsyl/coupled.hpp"
#include "qsyl/equations.hpp"
#include "qsyl/errors.hpp"
#include "qsyl/io.hpp"
#include "qsyl/linalg.hpp"
#include "qsyl/matrix.hpp"
#include "qsyl/quaternion.hpp"
#include "qsyl/verification.hpp"
