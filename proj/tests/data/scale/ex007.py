k = 0
n = eval(input())
k = k + n
n = eval(input())
k = k + n
n = eval(input())
k = k + n
print(k)
