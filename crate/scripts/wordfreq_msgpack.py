import gzip, struct
def unpack(b):
    pos=0
    def r():
        nonlocal pos
        t=b[pos]; pos+=1
        def take(n):
            nonlocal pos
            v=b[pos:pos+n]; pos+=n; return v
        if t<=0x7f: return t
        if 0x80<=t<=0x8f: return {r():r() for _ in range(t&0xf)}
        if 0x90<=t<=0x9f: return [r() for _ in range(t&0xf)]
        if 0xa0<=t<=0xbf: return take(t&0x1f).decode()
        if t==0xc0: return None
        if t==0xc2: return False
        if t==0xc3: return True
        if t==0xd9: n=take(1)[0]; return take(n).decode()
        if t==0xda: n=struct.unpack('>H',take(2))[0]; return take(n).decode()
        if t==0xdb: n=struct.unpack('>I',take(4))[0]; return take(n).decode()
        if t==0xdc: n=struct.unpack('>H',take(2))[0]; return [r() for _ in range(n)]
        if t==0xdd: n=struct.unpack('>I',take(4))[0]; return [r() for _ in range(n)]
        if t==0xde: n=struct.unpack('>H',take(2))[0]; return {r():r() for _ in range(n)}
        if t==0xcc: return take(1)[0]
        if t==0xcd: return struct.unpack('>H',take(2))[0]
        if t==0xce: return struct.unpack('>I',take(4))[0]
        if t>=0xe0: return t-256
        raise ValueError(hex(t))
    return r()
def words(lang='en', kind='large'):
    d=unpack(gzip.open(f'/usr/local/lib/python3.10/dist-packages/wordfreq/data/{kind}_{lang}.msgpack.gz').read())
    out=[]
    for bucket in d[1:]:
        out.extend(bucket)
    return out
