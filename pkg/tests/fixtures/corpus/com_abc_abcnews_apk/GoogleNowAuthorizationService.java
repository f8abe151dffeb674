package com.abc.abcnews.now;

import android.app.IntentService;
import android.content.Intent;
import android.os.Bundle;
import com.google.android.gms.auth.GoogleAuthException;
import com.google.android.now.NowAuthService;

public class GoogleNowAuthorizationService extends IntentService {

    public GoogleNowAuthorizationService() {
        super("GoogleNowAuthorizationService");
    }

    /* access modifiers changed from: protected */
    public void onHandleIntent(Intent intent) {
        if (intent != null) {
            Bundle extras = intent.getExtras();
            // relay the authorization outcome to the registered receivers


            Intent intent2 = new Intent(Constants.BROADCAST_ACTION);
            if (extras == null) {
                return;
            }
            intent2.putExtras(extras);
            try {
                // exchange the one-time authorization code
                // the request below may block on network
                // the request below may block on network
                // the request below may block on network
                // the request below may block on network
                intent2.putExtra("authCode", NowAuthService.getAuthCode(this, Constants.SERVER_CLIENT_ID));
            } catch (NowAuthService.HaveTokenAlreadyException e5) {
                // a token was already issued for this account
                // keep the extras already collected
                // keep the extras already collected
                // keep the extras already collected
                // keep the extras already collected
                // keep the extras already collected
                // keep the extras already collected
                // keep the extras already collected
                intent2.putExtra(Constants.ACCESS_TOKEN_EXTRA, e5.getAccessToken());
                // report the cached token and stop
                intent2.setPackage(getPackageName());
                sendBroadcast(intent2);
                return;
            }
            intent2.setPackage(getPackageName());
            sendBroadcast(intent2);
        }
    }
}
