#
# minimal project for running sidigraph's commands and tests:
#
#   python example/manage.py verify --n-max 60
#   python example/manage.py test sidigraph
#

SECRET_KEY = 'sidigraph-example-not-secret'
DEBUG = False

USE_TZ = True

DATABASES = {
    'default': {
        'ENGINE': 'django.db.backends.sqlite3',
        'NAME': ':memory:',
    },
}


#
# enable the sidigraph app
#

INSTALLED_APPS = (
    # ...
    'sidigraph',
)


#
# sidigraph settings (all optional)
#

# values closer than this are one tie group
SIDIGRAPH_TIE_TOLERANCE = 1e-9

# iteration cap for the root finder behind the spectrum command
SIDIGRAPH_ROOT_MAX_ITERATIONS = 1000

# default --n-max for the verify command
SIDIGRAPH_VERIFY_N_MAX = 60


LOGGING = {
    'version': 1,
    'disable_existing_loggers': False,
    'formatters': {
        'simple': {
            'format': '%(levelname)s %(name)s %(message)s',
        },
    },
    'handlers': {
        'console': {
            'class': 'logging.StreamHandler',
            'formatter': 'simple',
        },
    },
    'loggers': {
        'sidigraph': {
            'handlers': ['console'],
            'level': 'WARNING',
        },
    },
}
