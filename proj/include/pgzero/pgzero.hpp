#pragma once

#include "pgzero/errors.hpp"
#include "pgzero/util/numeric.hpp"
#include "pgzero/util/parallel.hpp"
#include "pgzero/grp/element.hpp"
#include "pgzero/grp/pc_presentation.hpp"
#include "pgzero/grp/group.hpp"
#include "pgzero/grp/element_set.hpp"
#include "pgzero/grp/families.hpp"
#include "pgzero/grp/quotient.hpp"
#include "pgzero/structure/classes.hpp"
#include "pgzero/structure/subgroups.hpp"
#include "pgzero/cyclo/cycint.hpp"
#include "pgzero/chartab/modular.hpp"
#include "pgzero/chartab/table.hpp"
#include "pgzero/chartab/dixon.hpp"
#include "pgzero/chartab/verify.hpp"
#include "pgzero/zeros/profile.hpp"
#include "pgzero/zeros/reports.hpp"
#include "pgzero/zeros/reference.hpp"
#include "pgzero/io/pcp_file.hpp"
#include "pgzero/io/group_spec.hpp"
#include "pgzero/io/serialize.hpp"
#include "pgzero/io/catalog.hpp"
