/* gridtest: the desk-scale acceptance battery. */

#pragma once

#include <ostream>

namespace gridtest
{

/*! \brief Run every acceptance criterion, printing one PASS/FAIL line each.
    Returns true iff all criteria pass. */
bool run_acceptance( std::ostream& out );

} // namespace gridtest
