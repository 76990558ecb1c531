#pragma once

#define RSQ_VERSION_MAJOR 1
#define RSQ_VERSION_MINOR 0
#define RSQ_VERSION_PATCH 0
#define RSQ_VERSION_STRING "1.0.0"
