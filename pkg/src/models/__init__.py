from .models import (EdgeSpec,
                     GraphFile,
                     DivisorEntry,
                     ClassRecord,
                     ScanReport,
                     CertificateReport,
                     CaseReport,
                     Command,
                     Report)
