#pragma once

#include "pisot/errors.hpp"
#include "pisot/field_element.hpp"
#include "pisot/field_matrices.hpp"
#include "pisot/number_field.hpp"
#include "pisot/sequences.hpp"
