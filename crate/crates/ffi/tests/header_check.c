#include "contact_verma.h"

int main(void) {
    CvModule *m = NULL;
    size_t dim = 0;
    if (cv_module_new('A', 1, 1, &m) != CV_STATUS_OK) return 1;
    if (cv_module_dim_v(m, &dim) != CV_STATUS_OK || dim != 4) return 1;
    cv_module_free(m);
    return 0;
}
